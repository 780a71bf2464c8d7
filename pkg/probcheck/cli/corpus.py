"""
The built-in corpus: the four birthday-month problems.
"""

CORPUS_SOURCE = "<corpus>"

CORPUS_TEXT = """\
# Two randomly chosen people, each equally likely to be born in any of 12 months.
space person[2] uniform(12)

# Problem 1: the two people were not born in the same month.
event p1: person[0] != person[1]

# Problem 2: the two people were not both born in May.
event p2: not (person[0] == may and person[1] == may)

# Problem 3: neither of the two people was born in May.
event p3: person[0] != may and person[1] != may

# Problem 1': the two people were not born in May. It reads as problem 2 or as
# problem 3, so it is declared as a fork of both readings, not as an event.
fork p1prime: person[0] == may, person[1] == may

# Problems 2 and 3 with "May" replaced by "the same month" both become problem 1.
fork same_month: person[0] == person[1]
"""
