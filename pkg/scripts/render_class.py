"""Write the Hasse diagram of the class containing a given tableau as DOT.

    python scripts/render_class.py "1 | 6 5 4 3 | 8 7 2" > worked.dot
    dot -Tpng worked.dot -o worked.png
"""

import sys

from cthecke.hecke import class_containing, class_to_dot
from cthecke.modrep import certify_indecomposable
from cthecke.tableaux import column_word, parse_tableau


def main(argv: list[str]) -> int:
    text = argv[1] if len(argv) > 1 else "1 | 6 5 4 3 | 8 7 2"
    e = class_containing(parse_tableau(text))
    sys.stdout.write(class_to_dot(e, "E"))
    cert = certify_indecomposable(e)
    print(
        f"{len(e)} members, {len(e.covers)} covers, source {e.source} (col {column_word(e.source)}), "
        f"sink {e.sink}, dim End {cert.dim_end}",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
