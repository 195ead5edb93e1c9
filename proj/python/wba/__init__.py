"""Python access to the exact weak bialgebra library.

Scalars come back as fractions.Fraction; structured results (axioms, reports) as dicts.
"""

import json
from fractions import Fraction

from ._core import ParseError, Spec, catalog_names
from ._core import catalog as _catalog

__all__ = ["ParseError", "Spec", "catalog", "catalog_names", "load", "counit", "axioms", "antipode", "report"]


def catalog(name):
    return _catalog(name)


def load(source):
    """Spec from JSON text, a dict, or a path."""
    if isinstance(source, dict):
        return Spec(json.dumps(source))
    text = str(source)
    if text.lstrip().startswith("{"):
        return Spec(text)
    with open(text) as f:
        return Spec(f.read())


def counit(spec):
    return [Fraction(x) for x in spec.counit]


def axioms(spec):
    return json.loads(spec.axioms())


def antipode(spec):
    """(kind, matrix of Fractions) or None; column j is the image of e_j."""
    found = spec.antipode()
    if found is None:
        return None
    kind, rows = found
    return kind, [[Fraction(x) for x in row] for row in rows]


def report(spec):
    return json.loads(spec.report())
