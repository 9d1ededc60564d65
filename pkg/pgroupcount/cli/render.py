"""Turn executor responses into table, JSON or CSV text."""

import csv
import io
import json

from pgroupcount.common.serialization import to_json

FORMATS = ("table", "json", "csv")


def render_table(headers: list[str], rows: list[list], notes: list[str] = ()) -> str:
    """Left-aligned columns separated by two spaces, followed by any note lines."""
    cells = [[str(x) for x in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    def line(values):
        return "  ".join(v.ljust(w) for v, w in zip(values, widths)).rstrip()

    out = []
    if headers:
        out.append(line(headers))
        out.append(line(["-" * w for w in widths]))
    out += [line(row) for row in cells]
    out += list(notes)
    return "\n".join(out)


def render_csv(headers: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def render_json(response: dict) -> str:
    """One JSON document per line: each record, then a summary with the report and notes, if any.

    Record lines carry ``kind``, ``by_type`` or ``coeffs``; the summary line never does.
    """
    lines = [to_json(obj) for obj in response.get("records", [])]
    summary = dict(response.get("report") or {})
    if response.get("notes"):
        summary["notes"] = list(response["notes"])
    if summary:
        lines.append(json.dumps(summary, ensure_ascii=False))
    return "\n".join(lines)


def render(response: dict, fmt: str = "table") -> str:
    if fmt == "json":
        return render_json(response)
    if fmt == "csv":
        return render_csv(response["headers"], response["rows"])
    if fmt == "table":
        return render_table(response["headers"], response["rows"], response.get("notes", []))
    raise ValueError(f"Unknown output format: {fmt}")
