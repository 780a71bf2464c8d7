"""
Command-line front end: eval, simulate, check, analyze and corpus.
"""

from .commands import CommandOptions, cmd_analyze, cmd_check, cmd_corpus, cmd_eval, cmd_simulate, load_expected
from .corpus import CORPUS_SOURCE, CORPUS_TEXT
from .main import build_parser, main, run
from .report import EventRecord, RunReport, render_text


__all__ = [
    "CORPUS_SOURCE",
    "CORPUS_TEXT",
    "CommandOptions",
    "EventRecord",
    "RunReport",
    "build_parser",
    "cmd_analyze",
    "cmd_check",
    "cmd_corpus",
    "cmd_eval",
    "cmd_simulate",
    "load_expected",
    "main",
    "render_text",
    "run",
]
