"""Exact JSON encoding: rationals as ``[numerator, denominator]`` pairs."""

import json
from fractions import Fraction
from pathlib import Path


def frac_to_json(x):
    x = Fraction(x)
    return [x.numerator, x.denominator]


def frac_from_json(v):
    if isinstance(v, bool):
        raise ValueError(f"bad rational {v!r}")
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, int) for x in v):
        if v[1] == 0:
            raise ValueError("zero denominator")
        return Fraction(v[0], v[1])
    if isinstance(v, int):
        return Fraction(v)
    raise ValueError(f"bad rational {v!r}")


def dumps(obj):
    """Deterministic text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def load_input(arg):
    """Parse ``arg`` as inline JSON when it looks like JSON, else as a file path."""
    text = arg.strip()
    if not text.startswith(("{", "[")):
        text = Path(arg).read_text()
    return json.loads(text)


def key_to_str(key):
    return ",".join(str(x) for x in key)


def key_from_str(s):
    return tuple(int(x) for x in s.split(",")) if s else ()
