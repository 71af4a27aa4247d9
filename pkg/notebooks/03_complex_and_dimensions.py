"""
The pushed-down complex and module dimensions
=============================================
"""

# %%
from kdirac.pushdown import build_complex, closed_descriptor

cx = build_complex(5)
print("positions", cx.positions)
print("widths   ", cx.widths)
print("orders   ", cx.orders)

# %%
for term in cx.terms:
    print(term.position, ", ".join(f"{m.name} ({m.dim})" for m in term.modules))

# %%
# the closed form gives the same modules without building weights
print(closed_descriptor(1, 1, 5).name, closed_descriptor(10, 0, 5).name)

# %%
# total dimension along the complex grows then shrinks
import sympy

for k in range(2, 7):
    totals = [sum(m.dim for m in t.modules) for t in build_complex(k).terms]
    print(k, totals, sympy.factorint(max(totals)))
