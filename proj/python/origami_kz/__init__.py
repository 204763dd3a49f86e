"""Kontsevich-Zorich monodromy of square-tiled surfaces (origamis)."""

import json

from . import _core
from ._core import OrigamiError

__version__ = _core.__version__

# args are (message, code, exit_code)
OrigamiError.message = property(lambda self: self.args[0])
OrigamiError.code = property(lambda self: self.args[1] if len(self.args) > 1 else None)
OrigamiError.exit_code = property(lambda self: self.args[2] if len(self.args) > 2 else None)

__all__ = [
    "OrigamiError",
    "analyze",
    "monodromy",
    "certify",
    "lyapunov",
    "census",
    "char_poly",
    "reference_fixtures",
    "origami",
]


def origami(h, v, n=None, name=""):
    """Input record for the commands below."""
    rec = {"name": name, "h": h, "v": v}
    if n is not None:
        rec["n"] = n
    return rec


def _dump(inp):
    return inp if isinstance(inp, str) else json.dumps(inp)


def analyze(inp, directions=()):
    text, _ = _core.analyze(_dump(inp), [tuple(d) for d in directions])
    return json.loads(text)


def monodromy(inp):
    text, _ = _core.monodromy(_dump(inp))
    return json.loads(text)


def certify(inp, density=True, arithmeticity=True, congruence_mod2=True, **words):
    """Returns (report, exit_code); exit code 5 means some certificate is undecided."""
    text, code = _core.certify(_dump(inp), density, arithmeticity, congruence_mod2, **words)
    return json.loads(text), code


def lyapunov(inp, iterations=32768, trials=32, seed=None, threads=0):
    kwargs = {} if seed is None else {"seed": seed}
    return json.loads(_core.lyapunov(_dump(inp), iterations, trials, threads=threads, **kwargs))


def census(max_squares):
    return json.loads(_core.census(max_squares))


def char_poly(matrix):
    """Coefficients of det(xI - M), low degree first."""
    return json.loads(_core.char_poly([list(r) for r in matrix]))


def reference_fixtures():
    return json.loads(_core.reference_fixtures_json())
