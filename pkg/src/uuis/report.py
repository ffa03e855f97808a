"""Report rendering: delimited text plus a bar-chart image.

The HTTP layer serves report rows as JSON or CSV; this module is the
command-line half, writing the rows to a delimited file and drawing the
same numbers as a PNG next to it.
"""
from __future__ import annotations

import csv

import matplotlib

matplotlib.use("Agg")

from matplotlib import pyplot as plt  # noqa: E402


def write_delimited(rows, path: str, delimiter: str = ",") -> str:
    """Write (key, count) rows with a header line. Returns the path."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter=delimiter)
        writer.writerow(["Key", "Count"])
        for key, count in rows:
            writer.writerow([key, count])
    return path


def render_figure(rows, path: str, title: str) -> str:
    """Draw the counts as a bar chart. Returns the path."""
    keys = [str(key) for key, _ in rows]
    counts = [count for _, count in rows]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.bar(keys, counts, color="#3b6ea5")
    ax.set_title(title)
    ax.set_ylabel("Assets")
    ax.grid(axis="y", alpha=0.3)
    if keys:
        plt.setp(ax.get_xticklabels(), rotation=30, ha="right")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def expiry_lines(watch: dict) -> list[str]:
    """Tab-separated lines for the license expiry watch output."""
    lines = ["LicenseID\tSoftware\tVersion\tExpires\tDaysRemaining\tState"]
    for state in ("expiring", "expired"):
        for entry in watch[state]:
            lines.append("\t".join([
                str(entry["LicenseID"]),
                str(entry["SoftwareName"]),
                str(entry["SoftwareVersion"]),
                str(entry["ExpirationDate"])[:10],  # day part only
                str(entry["DaysRemaining"]),
                state,
            ]))
    return lines
