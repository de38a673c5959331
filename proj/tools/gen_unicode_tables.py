#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Regenerates src/unicode_ps_ranges.inc from Python's unicodedata.

The table lists closed codepoint ranges whose general category is P*
(punctuation) or S* (symbol). Run from the repository root:

    python3 tools/gen_unicode_tables.py > src/unicode_ps_ranges.inc
"""

import unicodedata


def ps_ranges():
    start = None
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            member = False
        else:
            member = unicodedata.category(chr(cp))[0] in "PS"
        if member and start is None:
            start = cp
        elif not member and start is not None:
            yield (start, cp - 1)
            start = None
    if start is not None:
        yield (start, 0x10FFFF)


def main():
    ranges = list(ps_ranges())
    print("// Generated by tools/gen_unicode_tables.py from Python unicodedata")
    print(f"// (Unicode {unicodedata.unidata_version}). Do not edit by hand.")
    print("// Closed ranges of codepoints in general categories P* and S*.")
    print(f"static constexpr CodepointRange kPunctSymbolRanges[{len(ranges)}] = {{")
    for i in range(0, len(ranges), 4):
        row = ", ".join(f"{{0x{lo:04X}, 0x{hi:04X}}}" for lo, hi in ranges[i : i + 4])
        print(f"    {row},")
    print("};")


if __name__ == "__main__":
    main()
