"""Construction-script front end: parse, evaluate, report."""

from .interp import (
    AssertionRecord,
    RunReport,
    ScriptError,
    ScriptGeometryError,
    ScriptNameError,
    ScriptTypeError,
    evaluate,
    run_script,
)
from .parser import (
    Assertion,
    BinOp,
    Call,
    LetBinding,
    Measure,
    MEASURE_KINDS,
    Neg,
    Number,
    ParseError,
    PiConst,
    Reference,
    Script,
    Span,
    Token,
    format_expr,
    format_mexpr,
    format_script,
    parse,
    tokenize,
)

__all__ = [
    "AssertionRecord",
    "RunReport",
    "ScriptError",
    "ScriptGeometryError",
    "ScriptNameError",
    "ScriptTypeError",
    "evaluate",
    "run_script",
    "Assertion",
    "BinOp",
    "Call",
    "LetBinding",
    "Measure",
    "MEASURE_KINDS",
    "Neg",
    "Number",
    "ParseError",
    "PiConst",
    "Reference",
    "Script",
    "Span",
    "Token",
    "format_expr",
    "format_mexpr",
    "format_script",
    "parse",
    "tokenize",
]
