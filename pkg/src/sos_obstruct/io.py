"""Rendering and parsing of reports, relation matrices and scan tables.

JSON carries every integer as a decimal string. CSV is only produced for
scan tables.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .engine import SCHEMA_VERSION, VERSIONS, Caps, Report, ScanRow, ScanTable
from .linalg import IntegerMatrix, MembershipCertificate, separating_functional
from .relations import RelationMatrix, TargetVector
from .verdict import Bp2Certificate, ParityWitness, Triple, Verdict


def _triple_json(t: Triple | None) -> dict | None:
    if t is None:
        return None
    return {"r": str(t.r), "s": str(t.s), "n": str(t.n)}


def _fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def certificate_json(cert) -> dict | None:
    if cert is None:
        return None
    if isinstance(cert, ParityWitness):
        from .linalg import binomial

        return {
            "kind": "parity",
            "n": str(cert.n),
            "k": str(cert.k),
            "binomial": str(binomial(cert.n, cert.k)),
        }
    out = {
        "kind": "lattice",
        "profile": {"a": str(cert.a), "b": str(cert.b), "m": str(cert.m), "d": str(cert.a + cert.b - cert.m)},
        "matrix": IntegerMatrix(cert.matrix).to_json(),
        "target": [str(x) for x in cert.target],
        "membership": cert.membership.to_json(),
    }
    if not cert.membership.is_member:
        y = separating_functional(IntegerMatrix(cert.matrix), cert.target)
        out["separating_functional"] = [_fraction_str(x) for x in y]
    return out


def verdict_json(v: Verdict) -> dict:
    return {
        "status": v.status,
        "condition": v.condition,
        "witness": _triple_json(v.witness_triple),
        "certificate": certificate_json(v.certificate),
    }


def report_json(report: Report) -> dict:
    return {
        "schema": f"sos_obstruct.report/{SCHEMA_VERSION}",
        "versions": report.versions,
        "query": _triple_json(report.query),
        "caps": report.caps.to_json(),
        "per_condition": {name: verdict_json(v) for name, v in report.per_condition.items()},
        "overall": verdict_json(report.overall),
    }


def dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def verdict_from_json(data: dict) -> Verdict:
    """Rebuild a verdict, dropping the derived JSON-only fields."""
    witness = data.get("witness")
    triple = None if witness is None else Triple(int(witness["r"]), int(witness["s"]), int(witness["n"]))
    raw = data.get("certificate")
    cert = None
    if raw is not None and raw["kind"] == "parity":
        cert = ParityWitness(int(raw["n"]), int(raw["k"]))
    elif raw is not None:
        prof = raw["profile"]
        cert = Bp2Certificate(
            int(prof["a"]),
            int(prof["b"]),
            int(prof["m"]),
            IntegerMatrix.from_json(raw["matrix"]).entries,
            tuple(int(x) for x in raw["target"]),
            MembershipCertificate.from_json(raw["membership"]),
        )
    return Verdict(data["status"], data.get("condition"), triple, cert)


def render_report_text(report: Report) -> str:
    lines = [f"query {report.query}   (cone cap n' <= {report.caps.label})"]
    for name, v in report.per_condition.items():
        lines.append(f"  {name:<13} {_verdict_line(v)}")
    lines.append(f"overall: {_verdict_line(report.overall)}")
    cert = report.overall.certificate
    if isinstance(cert, Bp2Certificate):
        lines.append("")
        lines.append(f"relation matrix (a={cert.a}, b={cert.b}, m={cert.m}):")
        lines.append(format_matrix(cert.matrix))
        lines.append("target: " + format_vector(cert.target))
        if cert.membership.residual is not None:
            lines.append("residual after reduction: " + format_vector(cert.membership.residual))
    elif isinstance(cert, ParityWitness):
        lines.append(f"C({cert.n}, {cert.k}) is odd")
    return "\n".join(lines) + "\n"


def _verdict_line(v: Verdict) -> str:
    if not v.excluded:
        return "inconclusive"
    return f"excluded via {v.condition} at {v.witness_triple}"


def format_vector(v: Iterable[int]) -> str:
    return "[" + ", ".join(str(x) for x in v) + "]"


def format_matrix(rows) -> str:
    """Right-aligned columns, one bracketed row per line."""
    rows = [[str(x) for x in row] for row in rows]
    if not rows:
        return ""
    width = max(len(x) for row in rows for x in row)
    return "\n".join("[ " + " ".join(x.rjust(width) for x in row) + " ]" for row in rows)


def matrix_json(rel: RelationMatrix, target: TargetVector) -> dict:
    p = rel.profile
    return {
        "schema": f"sos_obstruct.matrix/{SCHEMA_VERSION}",
        "versions": VERSIONS,
        "profile": {"a": str(p.a), "b": str(p.b), "m": str(p.m), "d": str(p.d), "e": str(p.e)},
        "generators": [
            {"x1": str(i), "x2": str(j)} for i, j in (rel.generator(c) for c in range(p.d + 1))
        ],
        "matrix": rel.matrix.to_json(),
        "target": [str(x) for x in target.entries],
    }


def render_matrix_text(rel: RelationMatrix, target: TargetVector) -> str:
    p = rel.profile
    lines = [
        f"a={p.a} b={p.b} m={p.m} d={p.d}  triple {list(p.triple)}",
        f"columns: w_j = X1^(a-j) X2^(m-a+j), j = 0..{p.d}",
        format_matrix(rel.matrix.entries),
        "target: " + format_vector(target.entries),
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# scan tables

CSV_HEADER = ("r", "s", "n_hopf_stiefel", "n_bp2", "strongest")


def _cell(x) -> str:
    return "" if x is None else str(x)


def render_scan_csv(table: ScanTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in table.rows:
        writer.writerow([row.r, row.s, _cell(row.hopf_stiefel), _cell(row.bp2), _cell(row.strongest)])
    return buf.getvalue()


def scan_row_json(row: ScanRow) -> dict:
    return {
        "r": str(row.r),
        "s": str(row.s),
        "n_hopf_stiefel": None if row.hopf_stiefel is None else str(row.hopf_stiefel),
        "n_bp2": None if row.bp2 is None else str(row.bp2),
        "strongest": row.strongest,
    }


def scan_row_from_json(data: dict) -> ScanRow:
    def num(key):
        return None if data[key] is None else int(data[key])

    return ScanRow(int(data["r"]), int(data["s"]), num("n_hopf_stiefel"), num("n_bp2"))


def render_scan_json(table: ScanTable) -> str:
    return dumps(
        {
            "schema": f"sos_obstruct.scan/{SCHEMA_VERSION}",
            "versions": VERSIONS,
            "r_max": str(table.r_max),
            "s_max": str(table.s_max),
            "caps": table.caps.to_json(),
            "rows": [scan_row_json(row) for row in table.rows],
        }
    )


def render_scan_text(table: ScanTable) -> str:
    lines = [f"frontiers for r <= {table.r_max}, s <= {table.s_max}, r <= s   (cone cap n' <= {table.caps.label})"]
    header = f"{'r':>4} {'s':>4} {'hopf_stiefel':>12} {'bp2':>6}  strongest"
    lines.append(header)
    for row in table.rows:
        lines.append(
            f"{row.r:>4} {row.s:>4} {_cell(row.hopf_stiefel):>12} {_cell(row.bp2):>6}  {_cell(row.strongest)}"
        )
    return "\n".join(lines) + "\n"


class ScanCache:
    """Append-only newline-delimited JSON store of finished scan cells.

    Entries are keyed by (r, s, cap, tool version); anything else in the file
    is ignored on load.
    """

    def __init__(self, path: str | Path, caps: Caps):
        self.path = Path(path)
        self.caps = caps
        self.writable = True
        self._handle = None

    def _key(self, r: int, s: int) -> dict:
        return {"r": str(r), "s": str(s), "cap": self.caps.label, "version": VERSIONS}

    def load(self) -> dict[tuple[int, int], ScanRow]:
        found: dict[tuple[int, int], ScanRow] = {}
        try:
            text = self.path.read_text(encoding="utf-8")
        except FileNotFoundError:
            return found
        except OSError as exc:
            warn(f"cannot read cache {self.path}: {exc}")
            return found
        for line in text.splitlines():
            try:
                entry = json.loads(line)
                key, row = entry["key"], scan_row_from_json(entry["row"])
            except (ValueError, KeyError, TypeError):
                continue
            if key == self._key(row.r, row.s):
                found[(row.r, row.s)] = row
        return found

    def append(self, row: ScanRow) -> None:
        if not self.writable:
            return
        try:
            if self._handle is None:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                self._handle = open(self.path, "a", encoding="utf-8")
            entry = {"key": self._key(row.r, row.s), "row": scan_row_json(row)}
            self._handle.write(json.dumps(entry, sort_keys=True) + "\n")
            self._handle.flush()
        except OSError as exc:
            warn(f"cache {self.path} is not writable ({exc}); continuing without cache")
            self.writable = False

    def close(self) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None


def warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)
