"""Text rendering of polynomials and exponential polynomials.

Output is accepted by :func:`fermat_pdde.parser.parse_expression`; floats
use ``repr`` so a print/parse round trip is exact up to the arithmetic
the parser performs.
"""


def format_complex(v):
    v = complex(v)
    re, im = v.real + 0.0, v.imag + 0.0
    if im == 0:
        return f"({re!r})"
    if re == 0:
        return f"({im!r}i)"
    sign = "-" if im < 0 else "+"
    return f"({re!r}{sign}{abs(im)!r}i)"


def format_monomial(mono):
    parts = []
    for j, e in enumerate(mono, start=1):
        if e == 1:
            parts.append(f"z{j}")
        elif e > 1:
            parts.append(f"z{j}^{e}")
    return "*".join(parts)


def _sorted_terms(p):
    return sorted(p.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))


def format_poly(p):
    if p.is_zero():
        return "0"
    out = []
    for mono, v in _sorted_terms(p):
        m = format_monomial(mono)
        out.append(f"{format_complex(v)}*{m}" if m else format_complex(v))
    return " + ".join(out)


def format_exppoly(f):
    if f.is_zero():
        return "0"
    out = []
    for t in f.terms:
        c = f"({format_poly(t.coeff)})"
        if t.exponent.is_zero():
            out.append(c)
        else:
            out.append(f"{c}*e^({format_poly(t.exponent)})")
    return " + ".join(out)
