"""
BGG weights and their direct images
===================================
"""

# %%
from kdirac.bgg import build_bgg, row_bundles
from kdirac.pushdown import direct_images

d = build_bgg(3)
for b in row_bundles(d):
    print(f"V_{b.j}:", "   ".join(f"{v.label} {w}" for v, w in b.summands))

# %%
# rows 0 and 1 land in degree 1, row 2 has no image, the rest stay in degree 0
images = direct_images(d)
for v in sorted(images, key=lambda v: (v.row, v.col)):
    img = images[v]
    print(v.label, d[v], "->", img)

# %%
# a seed that is not Q-dominant is refused with the failing inequalities
from kdirac.errors import DominanceError
from kdirac.weights import Weight

try:
    build_bgg(3, Weight(3, (0, 10, 0, 0, 0)))
except DominanceError as err:
    print(err.violations)
