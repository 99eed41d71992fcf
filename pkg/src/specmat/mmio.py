"""Matrix Market writer/reader for the built matrices.

Real matrices are written in the dense ``array real general`` format;
complex matrices use ``coordinate complex`` with symmetric storage whenever
the matrix equals its transpose.  Entries are rendered with 17 significant
digits so a read-back reproduces the floats bit for bit.
"""

from __future__ import annotations

import numpy as np

HEADER_PREFIX = "%%MatrixMarket matrix"
_FLOAT = "{:.17g}"


def _is_real(a) -> bool:
    return bool(np.all(a.imag == 0.0))


def write_matrix_market(a, path, fmt: str | None = None) -> str:
    """Write a dense matrix to ``path`` in Matrix Market form.

    ``fmt`` may force ``"array"`` or ``"coordinate"``; by default real
    matrices go to the array format and complex ones to coordinate.
    Returns the header line that was written.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2:
        raise ValueError("only 2-D matrices can be written")
    rows, cols = a.shape
    if fmt is None:
        fmt = "array" if _is_real(a) else "coordinate"
    if fmt not in ("array", "coordinate"):
        raise ValueError(f"unknown format {fmt!r}")

    lines = []
    if fmt == "array":
        field = "real" if _is_real(a) else "complex"
        header = f"{HEADER_PREFIX} array {field} general"
        lines.append(header)
        lines.append(f"{rows} {cols}")
        for j in range(cols):  # array format is column-major
            for i in range(rows):
                if field == "real":
                    lines.append(_FLOAT.format(a[i, j].real))
                else:
                    lines.append(f"{_FLOAT.format(a[i, j].real)} {_FLOAT.format(a[i, j].imag)}")
    else:
        symmetric = rows == cols and bool(np.array_equal(a, a.T))
        shape_word = "symmetric" if symmetric else "general"
        header = f"{HEADER_PREFIX} coordinate complex {shape_word}"
        entries = []
        for i in range(rows):
            for j in range(cols):
                if symmetric and j > i:
                    continue  # store the lower triangle only
                if a[i, j] != 0:
                    entries.append(
                        f"{i + 1} {j + 1} "
                        f"{_FLOAT.format(a[i, j].real)} {_FLOAT.format(a[i, j].imag)}"
                    )
        lines.append(header)
        lines.append(f"{rows} {cols} {len(entries)}")
        lines.extend(entries)

    with open(path, "w", encoding="ascii") as handle:
        handle.write("\n".join(lines) + "\n")
    return header


def read_matrix_market(path) -> np.ndarray:
    """Read a Matrix Market file written by :func:`write_matrix_market`.

    Handles array real/complex and coordinate complex (general or
    symmetric).  Always returns a complex array.
    """
    with open(path, encoding="ascii") as handle:
        raw = [line.strip() for line in handle]
    lines = [line for line in raw if line and not (line.startswith("%") and not line.startswith("%%"))]
    header = lines[0]
    if not header.startswith(HEADER_PREFIX):
        raise ValueError(f"not a Matrix Market file: {header!r}")
    tokens = header.split()
    _, _, layout, field, shape_word = tokens[:5]

    if layout == "array":
        rows, cols = (int(t) for t in lines[1].split())
        out = np.zeros((rows, cols), dtype=complex)
        body = lines[2:]
        if len(body) != rows * cols:
            raise ValueError("array body length does not match the size line")
        pos = 0
        for j in range(cols):
            for i in range(rows):
                parts = body[pos].split()
                pos += 1
                if field == "real":
                    out[i, j] = float(parts[0])
                else:
                    out[i, j] = complex(float(parts[0]), float(parts[1]))
        return out

    if layout == "coordinate":
        rows, cols, nnz = (int(t) for t in lines[1].split())
        out = np.zeros((rows, cols), dtype=complex)
        body = lines[2:]
        if len(body) != nnz:
            raise ValueError("coordinate body length does not match the size line")
        for line in body:
            parts = line.split()
            i, j = int(parts[0]) - 1, int(parts[1]) - 1
            if field == "complex":
                value = complex(float(parts[2]), float(parts[3]))
            else:
                value = complex(float(parts[2]))
            out[i, j] = value
            if shape_word == "symmetric" and i != j:
                out[j, i] = value
        return out

    raise ValueError(f"unsupported layout {layout!r}")
