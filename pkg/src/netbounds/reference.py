"""Published lower bounds for 4 <= d <= 14 and 1 <= k <= d-2."""

from __future__ import annotations

# row k lists the bounds for d = k+2, k+3, ..., 14
_ROWS = {
    1: (1, 4, 14, 48, 165, 572, 2002, 7072, 25194, 90440, 326876),
    2: (1, 2, 6, 18, 57, 186, 622, 2120, 7338, 25724, 91144),
    3: (4, 12, 36, 113, 366, 1216, 4122, 14202, 49592, 175124),
    4: (12, 34, 107, 348, 1156, 3920, 13514, 47212, 166788),
    5: (36, 115, 372, 1232, 4166, 14326, 49950, 176178),
    6: (117, 370, 1232, 4164, 14326, 49920, 175978),
    7: (370, 1224, 4104, 14024, 48610, 170606),
    8: (1244, 4134, 14176, 49188, 172660),
    9: (4098, 13948, 48030, 167690),
    10: (14106, 48348, 169326),
    11: (47904, 166630),
    12: (168000,),
}

D_MAX = 14

PUBLISHED: dict[tuple[int, int], int] = {
    (max(4, k + 2) + i, k): bound for k, row in _ROWS.items() for i, bound in enumerate(row)
}


def published(d: int, k: int) -> int | None:
    return PUBLISHED.get((d, k))
