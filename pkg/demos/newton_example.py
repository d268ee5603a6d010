"""Escaping roots read off the north-east border of a Newton polygon.

For R(u, v) = u^8 + u^7 v^2 + u^5 v^4 + (5+7i) u^3 v^6 - 23 u v^7 the
roots u of R(u, w) that grow with w follow u ~ eps w^(slope), one group per
border edge. This script prints the border, compares the predicted roots
with numeric ones at w = 10^4, and then classifies a few operators.

    python3 demos/newton_example.py
"""

import json

import numpy as np

from invkit import classify_operator
from invkit.newton import asymptotic_roots, border_report
from invkit.parsing import parse_bipoly
from invkit.roots import find_roots

R = parse_bipoly("u^8+u^7 v^2+u^5 v^4+(5+7i)u^3 v^6-23 u v^7")
rep = border_report(R)
print("vertices:", rep["vertices"])
for e in rep["edges"]:
    consts = ", ".join(f"{complex(*c):.6f}" for c in e["leading_constants"])
    print(f"  slope {e['slope']:>5}  growth w^{e['growth']}  eps = {consts}")
print("positive cone of all leading constants:", rep["cone"]["variant"])

w = 1e4
pred = np.array(asymptotic_roots(R, w))
num = find_roots(R.numeric_in_u(w))
num = num[np.argsort(-np.abs(num))][: len(pred)]
err = [np.min(np.abs(num - p)) / abs(p) for p in pred]
print(f"w = {w:g}: {len(pred)} escaping roots, worst relative error {max(err):.2e}")

for text in ["(x^3+2x) D3 + x D2 + 1", "(x+1) D3 + x^4 D2 + 2x", "D3 - 1", "D1 - x"]:
    r = classify_operator(text).to_json()
    print(json.dumps({k: r[k] for k in ("operator", "fuchs_index", "newton_class", "subclass", "notes")}))
