"""Published closed forms used as regression anchors by ``spinkerov check``.

Strings are in the package's plain-text polynomial syntax.
"""

SPIN_KEROV = {
    1: "R2",
    3: "R4 + R2",
    5: "R6 + 15 R4 + 10 R2^2 + 8 R2",
    7: "R8 + 70 R6 + 168 R4 R2 + 56 R2^3 + 469 R4 + 560 R2^2 + 180 R2",
    9: (
        "R10 + 210 R8 + 600 R6 R2 + 540 R4^2 + 1080 R4 R2^2 + 240 R2^4"
        " + 5985 R6 + 23016 R4 R2 + 9120 R2^3 + 26060 R4 + 41628 R2^2 + 8064 R2"
    ),
}

ORDINARY_KEROV = {
    1: "R2",
    2: "R3",
    3: "R4 + R2",
    4: "R5 + 5 R3",
    5: "R6 + 15 R4 + 5 R2^2 + 8 R2",
    7: "R8 + 70 R6 + 84 R4 R2 + 56 R3^2 + 14 R2^3 + 469 R4 + 224 R2^2 + 180 R2",
    9: (
        "R10 + 210 R8 + 300 R6 R2 + 480 R5 R3 + 270 R4^2 + 360 R3^2 R2 + 270 R4 R2^2 + 30 R2^4"
        " + 5985 R6 + 10548 R4 R2 + 6714 R3^2 + 2400 R2^3 + 26060 R4 + 14580 R2^2 + 8064 R2"
    ),
}

SPIN_CHARACTERS = {
    1: "p1",
    3: "p3 - 3 p1^2 + 2 p1",
    5: "p5 - 10 p3 p1 + 55/3 p3 + 50/3 p1^3 - 50 p1^2 + 24 p1",
    7: (
        "p7 - 14 p5 p1 - 7 p3^2 + 77 p5 + 98 p3 p1^2 - 1862/3 p3 p1 - 343/3 p1^4"
        " + 2128/3 p3 + 2744/3 p1^3 - 1764 p1^2 + 720 p1"
    ),
    9: (
        "p9 - 18 p7 p1 - 18 p5 p3 + 222 p7 + 162 p5 p1^2 + 162 p3^2 p1 - 2538 p5 p1 - 1026 p3^2"
        " - 972 p3 p1^3 + 37401/5 p5 + 14094 p3 p1^2 + 4374/5 p1^5 - 52704 p3 p1 - 14580 p1^4"
        " + 47492 p3 + 70632 p1^3 - 109584 p1^2 + 40320 p1"
    ),
}

SPIN_FREE_CUMULANTS = {
    2: "p1",
    4: "p3 - 3 p1^2 + p1",
    6: "p5 - 10 p3 p1 + 10/3 p3 + 50/3 p1^3 - 15 p1^2 + p1",
    8: "p7 - 14 p5 p1 - 7 p3^2 + 7 p5 + 98 p3 p1^2 - 266/3 p3 p1 - 343/3 p1^4 + 7 p3 + 196 p1^3 - 35 p1^2 + p1",
    10: (
        "p9 - 18 p7 p1 - 18 p5 p3 + 12 p7 + 162 p5 p1^2 + 162 p3^2 p1 - 198 p5 p1 - 96 p3^2"
        " - 972 p3 p1^3 + 126/5 p5 + 1674 p3 p1^2 + 4374/5 p1^5 - 330 p3 p1 - 2430 p1^4"
        " + 12 p3 + 810 p1^3 - 63 p1^2 + p1"
    ),
}

SYMMETRIZED_CUMULANTS = {
    2: "p1",
    4: "p3 - 3 p1^2 + 1/4 p1",
}

SYMMETRIZED_KEROV = {
    1: "T2",
    3: "T4 + 7/4 T2",
}
