"""Append-only catalog files for pipeline results.

Line format, one record per line after a commented header::

    # curvedist catalog v1
    # template: genus2-nonseparating
    # genus: 2
    # template-sha256: <hex digest of the template text>
    # fields: P weights offset k distance
    12 [2, 2, 2, 2, 2, 2] 0 12 4+

The checksum ties records to the exact template text that produced
them; appending to a catalog written for a different template fails.
"""

from __future__ import annotations

import hashlib
import os
import re

from .errors import InputError
from .template import ArcTemplate, CatalogRecord, render_template

_HEADER_VERSION = "# curvedist catalog v1"
_RECORD_RE = re.compile(
    r"^(\d+) \[([0-9, ]*)\] (\d+) (\d+) (2|3|4\+)$"
)


def template_digest(template: ArcTemplate) -> str:
    return hashlib.sha256(render_template(template).encode()).hexdigest()


def format_record(rec: CatalogRecord) -> str:
    weights = ", ".join(str(w) for w in rec.weights)
    return f"{rec.p} [{weights}] {rec.offset} {rec.k} {rec.distance}"


def write_catalog(
    path: str,
    template: ArcTemplate,
    records,
    append: bool = False,
) -> None:
    digest = template_digest(template)
    exists = append and os.path.exists(path)
    if exists:
        header, _ = read_catalog(path)
        if header.get("template-sha256") != digest:
            raise InputError(
                f"catalog {path} was written for a different template "
                f"(checksum mismatch)"
            )
    mode = "a" if exists else "w"
    with open(path, mode, encoding="utf-8") as fh:
        if not exists:
            fh.write(_HEADER_VERSION + "\n")
            fh.write(f"# template: {template.name or '(unnamed)'}\n")
            fh.write(f"# genus: {template.genus}\n")
            fh.write(f"# template-sha256: {digest}\n")
            fh.write("# fields: P weights offset k distance\n")
        for rec in records:
            fh.write(format_record(rec) + "\n")


def read_catalog(path: str) -> tuple[dict[str, str], list[CatalogRecord]]:
    header: dict[str, str] = {}
    records: list[CatalogRecord] = []
    with open(path, encoding="utf-8") as fh:
        first = fh.readline().rstrip("\n")
        if first != _HEADER_VERSION:
            raise InputError(f"{path} is not a curvedist catalog")
        for raw in fh:
            line = raw.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                if ":" in line:
                    key, value = line[1:].split(":", 1)
                    header[key.strip()] = value.strip()
                continue
            m = _RECORD_RE.match(line)
            if not m:
                raise InputError(f"bad catalog record: {line!r}")
            weights = tuple(
                int(tok) for tok in m.group(2).split(",") if tok.strip()
            )
            records.append(
                CatalogRecord(
                    int(m.group(1)), weights, int(m.group(3)),
                    int(m.group(4)), m.group(5),
                )
            )
    return header, records
