"""Synthetic morphism tables for tests: width-valid and binary, but without
the kernel structure of the real external tables."""

from circwords import parse_fn_table


def make_table_45():
    width = 44 * 23
    rows = [
        "".join(str((a * (i + 1)) % 2) for i in range(width)) for a in range(1, 8)
    ]
    return parse_fn_table("45 7\n" + "\n".join(rows))
