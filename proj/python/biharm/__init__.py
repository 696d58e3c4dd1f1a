"""Exact tension and bitension fields on SU(2) representations."""

import json

from ._core import (  # noqa: F401
    BudgetExceeded,
    DivisionByZero,
    Error,
    IndexError,
    NotDivisible,
    ParseError,
    __version__,
    canonical,
    kappa,
    latex,
    rep,
    run,
    selftest,
    tension,
)
from . import _core


def extract_conditions(n, alpha, beta, budget_terms=0):
    """Condition system of the symbolic bitension numerator, as a dict."""
    return json.loads(_core._extract_conditions(n, alpha, beta, budget_terms))


def verify(n, alpha, beta, p=None, q=None, budget_terms=0):
    """Certificate dict for P/Q. Without p and q the proven (or conjectured) family is used."""
    p = [str(c) for c in (p or [])]
    q = [str(c) for c in (q or [])]
    return json.loads(_core._verify(n, alpha, beta, p, q, budget_terms))


def conjecture(n, alpha, beta, budget_terms=0):
    """Certificate dict for the conjectured family."""
    return json.loads(_core._conjecture(n, alpha, beta, budget_terms))


def _json_command(name, family, samples):
    code, out, err = run([name, "--family", family, "--samples", str(samples), "--json"])
    if code == 2:
        raise Error(err.strip())
    return json.loads(out)


def lift(family, samples=5):
    """Sphere lift report for a family spec like 'pi2:1,3'."""
    return _json_command("lift", family, samples)


def dual(family, samples=3):
    """Hyperbolic dual report for a family spec like 'pi2:1,3'."""
    return _json_command("dual", family, samples)
