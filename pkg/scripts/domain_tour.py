"""Print domain reports for a few rational functions over the char-0 fields."""

from skewconvex.expr import parse_function
from skewconvex.rational import domain_report
from skewconvex.scalars import Field

CASES = [
    (Field.quaternion(), ["(T-{i})^-1", "(T*T+{1})^-1", "(T*T-{2})^-1*T"]),
    (Field.gaussian("conj"), ["(T*T-{5})^-1", "(T-{1+i})^-1", "(T*T+{i}*T+{1})^-1"]),
    (Field.gaussian("id"), ["(T*T+{1})^-1", "(T-{i})^-1*(T+{i})"]),
]


def main():
    for F, exprs in CASES:
        print(F)
        for text in exprs:
            rep = domain_report(parse_function(text, F))
            classes = ", ".join(f"{c.representative} [{c.describe()}]" for c in rep.excluded) or "none"
            print(f"  {text:28s} excluded: {classes}  complete: {rep.complete}")


if __name__ == "__main__":
    main()
