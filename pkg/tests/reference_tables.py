"""Printed values transcribed for comparison: n -> (numerator, denominator, recurrence)."""

TABLE1 = {
    3: ("t^2+t-1", "2t^2+t-1", "a_{m+2} = a_{m+1} + 2a_m"),
    4: ("1-3t^2", "1-4t^2", "a_{m+2} = 4a_m"),
    5: ("t^3-2t^2-t+1", "2t^3-3t^2-t+1", "a_{m+3} = 3a_{m+2} - 3a_{m+1} + 2a_m"),
    6: ("2t^4-4t^2+1", "4t^4-5t^2+1", "a_{m+4} = 5a_{m+2} - 4a_m"),
    7: ("t^4+2t^3-3t^2-t+1", "2t^4+3t^3-4t^2-t+1", "a_{m+4} = a_{m+3} + 4a_{m+2} - 3a_{m+1} - 2a_m"),
    8: ("5t^4-5t^2+1", "8t^4-6t^2+1", "a_{m+4} = 6a_{m+2} - 8a_m"),
    9: ("t^5-3t^4-3t^3+4t^2+t-1", "2t^5-5t^4-4t^3+5t^2+t-1",
        "a_{m+5} = a_{m+4} + 5a_{m+3} - 4a_{m+2} - 5a_{m+1} + 2a_m"),
    10: ("2t^6-9t^4+6t^2-1", "4t^6-13t^4+7t^2-1", "a_{m+6} = 7a_{m+4} - 13a_{m+2} + 4a_m"),
}

TABLE2 = {
    3: ("-t^2", "t^2+t-1", "a_{m+2} = a_{m+1} + a_m"),
    4: ("t^2", "1-3t^2", "a_{m+2} = 3a_m"),
    5: ("-t^3+t^2", "t^3-2t^2-t+1", "a_{m+3} = a_{m+2} + 2a_{m+1} - a_m"),
    6: ("-2t^4+t^2", "2t^4-4t^2+1", "a_{m+4} = 4a_{m+2} - 2a_m"),
    7: ("-t^4-t^3+t^2", "t^4+2t^3-3t^2-t+1", "a_{m+4} = a_{m+3} + 3a_{m+2} - 2a_{m+1} - a_m"),
    8: ("-3t^4+t^2", "5t^4-5t^2+1", "a_{m+4} = 5a_{m+2} - 5a_m"),
    9: ("-t^5+2t^4+t^3-t^2", "t^5-3t^4-3t^3+4t^2+t-1",
        "a_{m+5} = a_{m+4} + 4a_{m+3} - 3a_{m+2} - 3a_{m+1} + a_m"),
    10: ("-2t^6+4t^4-t^2", "2t^6-9t^4+6t^2-1", "a_{m+6} = 6a_{m+4} - 9a_{m+2} + 2a_m"),
}

# degree -> leading terms, n = 3
TABLE3 = {
    2: ["uv"],
    3: ["u^3"],
    4: ["u^2v^2", "uv^2u"],
    5: ["u^4v", "u^2vu^2", "uv^4"],
}
TABLE3_COUNTS = {1: 0, 2: 1, 3: 1, 4: 2, 5: 3, 6: 5}

TABLE4 = {
    2: ["uv"],
    3: ["u^3"],
    4: ["u^2v^2", "uvuv", "uv^2u"],
    5: ["u^4v", "u^3vu", "u^2vu^2", "uvu^3", "uv^4"],
}
TABLE4_COUNTS = {1: 0, 2: 1, 3: 1, 4: 3, 5: 5, 6: 11}

H6_SERIES = [1, 0, 1, 1, 3, 5, 11, 21, 43, 85]
G6_SERIES = [0, 0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
