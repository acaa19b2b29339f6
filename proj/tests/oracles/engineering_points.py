#!/usr/bin/env python3
"""Independent oracle for the engineering design objectives.

Recomputes the objective and constraint values of the four design problems at
fixed probe points and writes data/engineering_reference_points.csv. The test
suite compares the C++ evaluations against this file at 1e-12 relative
tolerance, so this script must stay independent of the C++ sources.

Rows: problem,point,quantity,index,value
  point     semicolon-joined coordinates
  quantity  f (raw objective), g (inequality violation max(0, g_i)),
            h (equality residual |h_i|)
"""

import math

THETA = math.pi / 4


def cb(x):
    x1, x2, x3, x4 = x
    root = math.sqrt(abs(x3 * x3 - x2 * x2))
    f = 5.885 * x4 * (x1 + x3) / (x1 + root)
    span = 8.94 * (x1 + root)
    g = [
        -x4 * x2 * (0.4 * x1 + x3 / 6.0) + span,
        -x4 * x2 * x2 * (0.2 * x1 + x3 / 12.0) + 2.2 * span ** (4.0 / 3.0),
        -x4 + 0.0156 * x1 + 0.15,
        -x4 + 0.0156 * x3 + 0.15,
        -x4 + 1.05,
        -x3 + x2,
    ]
    return f, g, []


def pl(x):
    x1, x2, x3, x4 = x
    q, p, lever, m_max = 10000.0, 1500.0, 240.0, 1.8e6
    force = 0.25 * math.pi * p * x3 * x3
    l1 = math.sqrt((x4 - x2) ** 2 + x1 * x1)
    l2 = math.sqrt((x4 * math.sin(THETA) + x1) ** 2 + (x2 - x4 * math.cos(THETA)) ** 2)
    r = abs(-x4 * (x4 * math.sin(THETA) + x1) + x1 * (x2 - x4 * math.cos(THETA))) / l1
    f = 0.25 * math.pi * x3 * x3 * (l2 - l1)
    g = [
        q * lever * math.cos(THETA) - r * force,
        q * (lever - x4) - m_max,
        1.2 * (l2 - l1) - l1,
        x3 / 2.0 - x2,
    ]
    return f, g, []


def rn(x):
    x1, x2, x3, x4, x5, x6 = x
    k1 = 0.09755988
    k2 = 0.99 * k1
    k3 = 0.0391908
    k4 = 0.9 * k3
    g = [math.sqrt(x5) + math.sqrt(x6) - 4.0]
    h = [
        x1 + k1 * x2 * x5 - 1.0,
        x2 - x1 + k2 * x2 * x6,
        x3 + x1 + k3 * x3 * x5 - 1.0,
        x4 - x3 + x2 - x1 + k4 * x4 * x6,
    ]
    return x4, g, h


def irs(x):
    x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11, x12, x13, x14 = x
    f = (
        63098.88 * x2 * x4 * x12
        + 5441.5 * x2**2 * x12
        + 115055.5 * x2**1.664 * x6
        + 6172.27 * x2**2 * x6
        + 63098.88 * x1 * x3 * x11
        + 5441.5 * x1**2 * x11
        + 115055.5 * x1**1.664 * x5
        + 6172.27 * x1**2 * x5
        + 140.53 * x1 * x11
        + 281.29 * x3 * x11
        + 70.26 * x1**2
        + 281.29 * x1 * x3
        + 281.29 * x3**2
        + 14437 * x8**1.8812 * x12**0.3424 * x10 * x1**2 * x7 / (x14 * x9)
        + 20470.2 * x7**2.893 * x11**0.316 * x12
    )
    g = [
        1.524 / x7 - 1.0,
        1.524 / x8 - 1.0,
        0.07789 * x1 - 2.0 * x9 / x7 - 1.0,
        7.05305 * x1**2 * x10 / (x9 * x8 * x2 * x14) - 1.0,
        0.0833 * x14 / x13 - 1.0,
        47.136 * x2**0.333 * x12 / x10
        - 1.333 * x8 * x13**2.1195
        + 62.08 * x13**2.1195 * x8**0.2 / (x12 * x10)
        - 1.0,
        0.04771 * x10 * x8**1.8812 * x12**0.3424 - 1.0,
        0.0488 * x9 * x7**1.893 * x11**0.316 - 1.0,
        0.0099 * x1 / x3 - 1.0,
        0.0193 * x2 / x4 - 1.0,
        0.0298 * x1 / x5 - 1.0,
        0.056 * x2 / x6 - 1.0,
        2.0 / x9 - 1.0,
        2.0 / x10 - 1.0,
        x12 / x11 - 1.0,
    ]
    return f, g, []


POINTS = {
    "CB": [
        [1.0, 1.0, 1.0, 1.0],
        [10.0, 5.0, 8.0, 2.0],
        [57.69230769, 34.14762035, 57.69230769, 1.05],
        [80.0, 60.0, 40.0, 4.5],
        [25.0, 25.0, 70.0, 1.2],
    ],
    "PL": [
        [0.05, 0.05, 0.05, 0.05],
        [100.0, 50.0, 10.0, 200.0],
        [250.0, 250.0, 60.0, 250.0],
        [10.0, 1.0, 2.0, 10.0],
        [450.0, 120.0, 100.0, 480.0],
    ],
    "RN": [
        [0.5, 0.5, 0.5, 0.5, 4.0, 4.0],
        [1e-05, 1e-05, 1e-05, 1e-05, 16.0, 16.0],
        [0.9, 0.8, 0.2, 0.3, 1.5, 2.5],
        [0.4432, 0.4390, 0.3689, 0.3718, 13.0, 0.1],
        [1.0, 1.0, 1.0, 1.0, 0.5, 0.25],
    ],
    "IRS": [
        [2.5] * 14,
        [0.001] * 14,
        [5.0] * 14,
        [1.0, 2.0, 3.0, 4.0, 4.5, 0.5, 1.6, 1.7, 2.5, 2.1, 1.2, 0.9, 0.4, 0.3],
        [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 1.6, 1.8, 2.2, 2.4, 2.6, 2.8, 3.0, 3.2],
    ],
}

FUNCS = {"CB": cb, "PL": pl, "RN": rn, "IRS": irs}


def main():
    rows = ["problem,point,quantity,index,value"]
    for problem, points in POINTS.items():
        for x in points:
            f, g, h = FUNCS[problem](x)
            point = ";".join(f"{v:.17g}" for v in x)
            rows.append(f"{problem},{point},f,0,{f:.17g}")
            for i, gi in enumerate(g):
                rows.append(f"{problem},{point},g,{i},{max(0.0, gi):.17g}")
            for i, hi in enumerate(h):
                rows.append(f"{problem},{point},h,{i},{abs(hi):.17g}")
    with open("data/engineering_reference_points.csv", "w") as out:
        out.write("\n".join(rows) + "\n")
    print(f"wrote {len(rows) - 1} reference values")


if __name__ == "__main__":
    main()
