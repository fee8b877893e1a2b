"""The four benchmark string sets with their expected closest strings and
the (A, B, chain strength) settings they are usually run with."""

BENCHMARK_SETS = {
    1: ["aaa", "aaa", "ddd"],
    2: ["aaa", "aaa", "ddd", "ddd", "ddd"],
    3: ["aaa", "aaa", "ded", "ded", "ded", "ddd"],
    4: ["abcdef", "ghijkl", "abcghi", "xyzjkl", "abcmno"],
}

EXPECTED = {1: "aaa", 2: "ddd", 3: "ded", 4: "abcjkl"}

# (A, B, gamma) per set; identical for both Hamiltonians
SETTINGS = {1: (2.0, 1.0, 0.0), 2: (3.0, 1.0, 1.0), 3: (5.0, 1.0, 6.0), 4: (4.0, 1.0, 5.0)}
