"""JSON reports for the command-line experiments."""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .ring import Polynomial, format_polynomial

SCHEMA_VERSION = 1

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


def polynomial_certificate(name: str, f: Polynomial) -> dict:
    """Text form with the leading coefficient made positive; ``sign`` records the flip."""
    g = f.sign_normalized()
    text = format_polynomial(g)
    return {
        "name": name,
        "sign": 1 if g == f else -1,
        "polynomial": text,
        "sha256": hashlib.sha256(text.encode()).hexdigest(),
        "degree": f.degree() if not f.is_zero() else None,
        "terms": len(f),
    }


def scalar_certificate(name: str, value) -> dict:
    return {"name": name, "value": str(value)}


def jsonable(obj):
    """Recursively convert exact scalars, tuples and int-keyed dicts for json."""
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else int(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Polynomial):
        return format_polynomial(obj)
    return obj


@dataclass
class Report:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    per_degree_dims: dict = field(default_factory=dict)
    verdict: bool | None = None
    certificates: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    def exit_code(self) -> int:
        if self.verdict is None:
            return EXIT_INCONCLUSIVE
        return EXIT_PASS if self.verdict else EXIT_FAIL

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": jsonable(self.inputs),
            "results": jsonable(self.results),
            "per_degree_dims": jsonable(self.per_degree_dims),
            "verdict": self.verdict,
            "certificates": jsonable(self.certificates),
            "timing": self.timing,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start
        return False
