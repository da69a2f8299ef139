"""The ``.geo`` construction-and-assertion language."""
from trigeom.script.ast import Script, pretty
from trigeom.script.evaluate import EvalError, EvalReport, bind, evaluate
from trigeom.script.parser import Diagnostic, ScriptSyntaxError, diagnose, parse

__all__ = [
    "Diagnostic", "EvalError", "EvalReport", "Script", "ScriptSyntaxError",
    "bind", "diagnose", "evaluate", "parse", "pretty",
]
