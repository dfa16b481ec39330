"""Reader and writer for ``qcaseed v1`` seed files.

    qcaseed v1
    # comments and blank lines are ignored
    rank: 2
    matrix:
      0 -1
      1  0
    d: 2 1
    r: 1 2            (optional)
    z 1 1: symbolic   (one line per frozen coefficient, 1-based i and s)
    sequence: 1 2 1 2 1 2
    sigma: 1 2        (optional, identity by default)
    order: 12         (optional)

Lists may be separated by spaces or commas.  Indices are 1-based in the file
and 0-based in the Python objects.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import ReciprocityError, SeedFileError, SkewSymmetrizabilityError
from .series import DEFAULT_ORDER
from .torus import SYMBOLIC, ExchangeData

HEADER = "qcaseed v1"
_KEYS = ("rank", "matrix", "d", "r", "sequence", "sigma", "order")


@dataclass(frozen=True)
class SeedFile:
    ed: ExchangeData
    sequence: tuple = ()
    sigma: tuple | None = None
    order: int = DEFAULT_ORDER


def _ints(text: str, fld: str, line: int) -> list:
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise SeedFileError(f"expected integers, got {text.strip()!r}", fld, line) from None


def parse_seed(text: str) -> SeedFile:
    lines = text.splitlines()
    body = [(n, ln.split("#", 1)[0].strip()) for n, ln in enumerate(lines, 1)]
    body = [(n, ln) for n, ln in body if ln]
    if not body or body[0][1].lower() != HEADER:
        raise SeedFileError(f"first line must be '{HEADER}'", "header", body[0][0] if body else 1)
    fields: dict = {}
    where: dict = {}
    zs: dict = {}
    matrix: list = []
    in_matrix = False
    for n, ln in body[1:]:
        m = re.fullmatch(r"z\s+(\S+)\s+(\S+)\s*[:=]\s*(.+)", ln, flags=re.IGNORECASE)
        if m:
            in_matrix = False
            try:
                i, s = int(m.group(1)), int(m.group(2))
            except ValueError:
                raise SeedFileError("indices must be integers", "z", n) from None
            raw = m.group(3).strip()
            if raw.lower() == SYMBOLIC:
                val = SYMBOLIC
            else:
                try:
                    val = Fraction(raw)
                except (ValueError, ZeroDivisionError):
                    raise SeedFileError(f"expected 'symbolic' or a rational, got {raw!r}", "z", n) from None
            if (i, s) in zs:
                raise SeedFileError(f"z {i} {s} given twice", "z", n)
            zs[(i, s)] = (val, n)
            continue
        m = re.fullmatch(r"([A-Za-z]+)\s*[:=]\s*(.*)", ln)
        if m:
            key, val = m.group(1).lower(), m.group(2)
            if key not in _KEYS:
                raise SeedFileError(f"unknown field {key!r}", key, n)
            if key in fields:
                raise SeedFileError("given twice", key, n)
            where[key] = n
            if key == "matrix":
                in_matrix = True
                if val.strip():
                    matrix.append((n, _ints(val, "matrix", n)))
                fields[key] = True
            else:
                in_matrix = False
                fields[key] = val
            continue
        if in_matrix:
            matrix.append((n, _ints(ln, "matrix", n)))
            continue
        raise SeedFileError(f"cannot parse {ln!r}", None, n)

    for key in ("matrix", "d"):
        if key not in fields:
            raise SeedFileError("missing", key)
    rows = [r for _, r in matrix]
    n_rank = len(rows)
    if "rank" in fields:
        rk = _ints(fields["rank"], "rank", where["rank"])
        if len(rk) != 1 or rk[0] < 1:
            raise SeedFileError("rank must be one positive integer", "rank", where["rank"])
        n_rank = rk[0]
        if len(rows) != n_rank:
            raise SeedFileError(f"expected {n_rank} rows, got {len(rows)}", "matrix", where["matrix"])
    for ln_no, row in matrix:
        if len(row) != n_rank:
            raise SeedFileError(f"row has {len(row)} entries, expected {n_rank}", "matrix", ln_no)
    d = _ints(fields["d"], "d", where["d"])
    if len(d) != n_rank or any(x < 1 for x in d):
        raise SeedFileError(f"need {n_rank} positive degrees", "d", where["d"])
    r = None
    if "r" in fields:
        r = _ints(fields["r"], "r", where["r"])
        if len(r) != n_rank or any(x < 1 for x in r):
            raise SeedFileError(f"need {n_rank} positive weights", "r", where["r"])
    z = {}
    for (i, s), (val, ln_no) in zs.items():
        if not (1 <= i <= n_rank and 1 <= s <= d[i - 1] - 1):
            raise SeedFileError(f"no coefficient z {i} {s} for the given degrees", "z", ln_no)
        z[(i - 1, s)] = val
    try:
        ed = ExchangeData(tuple(map(tuple, rows)), tuple(d), None if r is None else tuple(r), z)
    except SkewSymmetrizabilityError as exc:
        raise SeedFileError(str(exc), "matrix", where["matrix"]) from None
    except ReciprocityError as exc:
        raise SeedFileError(str(exc), "z") from None
    except ValueError as exc:
        raise SeedFileError(str(exc), "matrix", where["matrix"]) from None

    seq = ()
    if "sequence" in fields:
        seq = tuple(_ints(fields["sequence"], "sequence", where["sequence"]))
        bad = [k for k in seq if not 1 <= k <= n_rank]
        if bad:
            raise SeedFileError(f"index {bad[0]} out of range 1..{n_rank}", "sequence", where["sequence"])
        seq = tuple(k - 1 for k in seq)
    sigma = None
    if "sigma" in fields:
        sg = _ints(fields["sigma"], "sigma", where["sigma"])
        if sorted(sg) != list(range(1, n_rank + 1)):
            raise SeedFileError(f"not a permutation of 1..{n_rank}", "sigma", where["sigma"])
        sigma = tuple(x - 1 for x in sg)
    order = DEFAULT_ORDER
    if "order" in fields:
        o = _ints(fields["order"], "order", where["order"])
        if len(o) != 1 or o[0] < 1:
            raise SeedFileError("order must be one positive integer", "order", where["order"])
        order = o[0]
    return SeedFile(ed, seq, sigma, order)


def load_seed(path) -> SeedFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SeedFileError(f"cannot read {path}: {exc.strerror}", "file") from None
    except UnicodeDecodeError:
        raise SeedFileError(f"{path} is not UTF-8", "file") from None
    return parse_seed(text)


def _fmt_z(v) -> str:
    if v is SYMBOLIC or v == SYMBOLIC:
        return SYMBOLIC
    return str(Fraction(v))


def format_seed(seed: SeedFile) -> str:
    ed = seed.ed
    width = max(len(str(x)) for row in ed.B for x in row)
    out = [HEADER, f"rank: {ed.n}", "matrix:"]
    out += ["  " + " ".join(str(x).rjust(width) for x in row) for row in ed.B]
    out.append("d: " + " ".join(map(str, ed.d)))
    out.append("r: " + " ".join(map(str, ed.r)))
    for (i, s), v in sorted(ed.z.items()):
        out.append(f"z {i + 1} {s}: {_fmt_z(v)}")
    out.append("sequence: " + " ".join(str(k + 1) for k in seed.sequence))
    if seed.sigma is not None:
        out.append("sigma: " + " ".join(str(x + 1) for x in seed.sigma))
    out.append(f"order: {seed.order}")
    return "\n".join(out) + "\n"


def write_seed(seed: SeedFile, path) -> None:
    Path(path).write_text(format_seed(seed), encoding="utf-8")
