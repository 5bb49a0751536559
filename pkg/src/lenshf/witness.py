"""Witness records, the bordered matrix they generate, exact determinant
evaluation, and certificate (de)serialization.

A witness (a, t, l) for L(p, q) generates the (n+1) x (n+1) integer matrix

    [ p      -q*a_1  ...  -q*a_n ]
    [ a_1    t_1          l_1n   ]
    [ ...          ...           ]
    [ a_n    l_n1         t_n    ]

and certifies a planar fibered surface with n+1 boundary components exactly
when the determinant is ±1.  Determinants are evaluated exactly over the
integers: cofactor expansion through size 4, fraction-free Bareiss
elimination above that.  Certificates serialize every integer as a decimal
string so JSON consumers never round through 53-bit floats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Any

from .errors import DomainError
from .lens import LensSpace


@dataclass
class Witness:
    """Boundary data: length-n lists a and t plus a symmetric n x n linking
    matrix l with zero diagonal."""

    a: list[int]
    t: list[int]
    l: list[list[int]]

    def __post_init__(self):
        n = len(self.a)
        if n < 1:
            raise DomainError("witness needs n >= 1")
        if len(self.t) != n:
            raise DomainError(f"len(t) = {len(self.t)} != len(a) = {n}")
        if len(self.l) != n or any(len(row) != n for row in self.l):
            raise DomainError("l must be an n x n matrix")
        for i in range(n):
            if self.l[i][i] != 0:
                raise DomainError("l must have zero diagonal")
            for j in range(i + 1, n):
                if self.l[i][j] != self.l[j][i]:
                    raise DomainError("l must be symmetric")

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def single(cls, a: int, t: int) -> "Witness":
        return cls([a], [t], [[0]])

    @classmethod
    def pair(cls, a1: int, a2: int, t1: int, t2: int, l12: int) -> "Witness":
        return cls([a1, a2], [t1, t2], [[0, l12], [l12, 0]])


@dataclass(frozen=True)
class Certificate:
    """A witness together with its exactly evaluated determinant."""

    lens: LensSpace
    witness: Witness
    det: int
    valid: bool
    trace: Any = None  # ConstructionTrace for pipeline-built witnesses


def assemble_matrix(lens: LensSpace, w: Witness) -> list[list[int]]:
    """The bordered (n+1) x (n+1) matrix of a witness."""
    n = w.n
    rows = [[lens.p] + [-lens.q * aj for aj in w.a]]
    for i in range(n):
        row = [w.a[i]]
        for j in range(n):
            row.append(w.t[i] if i == j else w.l[i][j])
        rows.append(row)
    return rows


def _det_cofactor(m: list[list[int]]) -> int:
    size = len(m)
    if size == 1:
        return m[0][0]
    if size == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j, head in enumerate(m[0]):
        if head == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * head * _det_cofactor(minor)
    return total


def _det_bareiss(m: list[list[int]]) -> int:
    """Fraction-free Bareiss elimination; every division is exact."""
    m = [row[:] for row in m]
    size = len(m)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[size - 1][size - 1]


def det_exact(m: list[list[int]]) -> int:
    """Exact integer determinant of a square integer matrix."""
    size = len(m)
    if any(len(row) != size for row in m):
        raise DomainError("matrix must be square")
    if size <= 4:
        return _det_cofactor(m)
    return _det_bareiss(m)


def verify(lens: LensSpace, w: Witness) -> Certificate:
    """Evaluate the witness determinant exactly; valid iff it is ±1.

    Never raises for well-formed inputs: a witness that fails to certify
    simply comes back with valid=False.
    """
    det = det_exact(assemble_matrix(lens, w))
    return Certificate(lens, w, det, det in (1, -1))


def pad(w: Witness) -> Witness:
    """Append a boundary component with a=0, t=1, zero linking.

    Cofactor expansion along the new last row shows the determinant is
    unchanged, so padding turns an n-witness into an (n+1)-witness for the
    same lens space.
    """
    n = w.n
    new_l = [row[:] + [0] for row in w.l]
    new_l.append([0] * (n + 1))
    return Witness(w.a + [0], w.t + [1], new_l)


# --- JSON interchange -------------------------------------------------------
# {p, q, n, a: [..], t: [..], l: [[..]], det, valid, trace?} with every
# integer a decimal string.  Parsing also tolerates raw JSON integers.

_TRACE_INT_FIELDS = (
    "k", "q_prime", "s_prime", "eps", "z", "z_inv", "eps_prime",
    "D", "n_form", "z0", "C0", "w",
)


def _parse_int(value: Any) -> int:
    if isinstance(value, bool):
        raise ValueError("boolean is not an integer field")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value.strip(), 10)
    raise ValueError(f"expected integer or decimal string, got {value!r}")


def _parse_list(value: Any) -> list:
    if not isinstance(value, list):
        raise ValueError(f"expected a JSON array, got {value!r}")
    return value


def certificate_to_dict(cert: Certificate, include_trace: bool = True) -> dict:
    d = {
        "p": str(cert.lens.p),
        "q": str(cert.lens.q),
        "n": str(cert.witness.n),
        "a": [str(v) for v in cert.witness.a],
        "t": [str(v) for v in cert.witness.t],
        "l": [[str(v) for v in row] for row in cert.witness.l],
        "det": str(cert.det),
        "valid": cert.valid,
    }
    if include_trace and cert.trace is not None:
        tr = {"branch": cert.trace.branch}
        for name in _TRACE_INT_FIELDS:
            tr[name] = str(getattr(cert.trace, name))
        d["trace"] = tr
    return d


def certificate_from_dict(data: dict) -> Certificate:
    """Rebuild a certificate from its JSON dict.

    Raises ValueError/KeyError/TypeError on malformed structure (parse
    failures) and DomainError on semantically invalid lens or witness data.
    """
    from .solver import ConstructionTrace  # local import to avoid a cycle

    lens = LensSpace(_parse_int(data["p"]), _parse_int(data["q"]))
    n = _parse_int(data["n"])
    a = [_parse_int(v) for v in _parse_list(data["a"])]
    t = [_parse_int(v) for v in _parse_list(data["t"])]
    l = [[_parse_int(v) for v in _parse_list(row)] for row in _parse_list(data["l"])]
    if len(a) != n:
        raise ValueError(f"declared n = {n} but len(a) = {len(a)}")
    w = Witness(a, t, l)
    det = _parse_int(data["det"])
    valid = data["valid"]
    if not isinstance(valid, bool):
        raise ValueError("valid must be a JSON boolean")
    trace = None
    if "trace" in data and data["trace"] is not None:
        raw = data["trace"]
        branch = raw["branch"]
        if not isinstance(branch, str):
            raise ValueError("trace.branch must be a string")
        trace = ConstructionTrace(
            branch=branch, **{name: _parse_int(raw[name]) for name in _TRACE_INT_FIELDS}
        )
    return Certificate(lens, w, det, valid, trace)


def certificate_to_json(cert: Certificate, include_trace: bool = True) -> str:
    return json.dumps(certificate_to_dict(cert, include_trace), indent=2)


def certificate_from_json(text: str) -> Certificate:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("certificate JSON must be an object")
    return certificate_from_dict(data)


def with_trace(cert: Certificate, trace) -> Certificate:
    return replace(cert, trace=trace)
