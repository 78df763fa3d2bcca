"""
Reading expressions and driving the command line from Python
============================================================

Coefficients are typed as plain rational expressions in x.  Integer
division between literals gives exact fractions, ``3x`` means ``3*x`` and
``1/2x`` means one half times x.
"""
import io

from iterode import parse_expression
from iterode.cli import run
from iterode.parser import ParseError, parse_coefficient_list

for text in ["x^3 + 3x", "1/2x", "(x+1)/(x-1) - 1", "2(x+1)^2"]:
    print(f"{text!r:22} -> {parse_expression(text)}")

print([str(c) for c in parse_coefficient_list("x^3+3x; 3+3x^2; 3x")])

# Errors carry the offending character offset.
try:
    parse_expression("x + * 2")
except ParseError as exc:
    print("parse error at offset", exc.offset, ":", exc.message)

# The ``iterode`` executable is a thin shell around ``run``; calling it
# in-process is handy in scripts and notebooks.
def iterode(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    print(f"$ iterode {' '.join(argv)}\n{out.getvalue()}{err.getvalue()}[exit {code}]\n")
    return out.getvalue()

print()
iterode("generate", "--order", "3", "--r", "1", "--s", "x")
iterode("check", "--coeffs", "x^3+3x; 3+3x^2; 3x")
iterode("check", "--coeffs", "x^3+3x+1; 3+3x^2; 3x")
iterode("normalize", "--order", "3", "--coeffs", "x^3+3x; 3+3x^2; 3x")
iterode("coeffs", "--order", "3", "--form", "simplified", "--normal")
