"""Regenerate data/wdbc.csv from the scikit-learn copy of the breast cancer
Wisconsin (diagnostic) data.

The CSV is committed to the repo so the sampling library itself has no
sklearn dependency. Columns: 30 raw (unstandardized) features in sklearn
order, then the binary target (0 = malignant, 1 = benign).
"""

import csv
from pathlib import Path

from sklearn.datasets import load_breast_cancer

OUT = Path(__file__).resolve().parents[1] / "data" / "wdbc.csv"


def main() -> None:
    bunch = load_breast_cancer()
    header = [name.replace(" ", "_") for name in bunch.feature_names] + ["target"]
    with OUT.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row, label in zip(bunch.data, bunch.target):
            writer.writerow([repr(float(x)) for x in row] + [int(label)])
    print(f"wrote {OUT} ({len(bunch.target)} rows)")


if __name__ == "__main__":
    main()
