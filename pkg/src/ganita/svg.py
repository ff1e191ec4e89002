"""Schematic SVG from a scene document (the dict produced by ``Scene.to_json``)."""

from xml.sax.saxutils import escape

from .scene import scalar_to_float

MARGIN = 0.05


def _num(v):
    return f"{v + 0.0:.12g}"


def render_svg(doc, width=480):
    pegs = {p["name"]: (scalar_to_float(p["x"]), scalar_to_float(p["y"])) for p in doc["pegs"]}
    xs = [x for x, _ in pegs.values()]
    ys = [y for _, y in pegs.values()]
    for c in doc["circles"]:
        cx, cy = pegs[c["center"]]
        r = scalar_to_float(c["radius"])
        xs += [cx - r, cx + r]
        ys += [cy - r, cy + r]
    if not xs:
        xs, ys = [0.0, 1.0], [0.0, 1.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    pad = MARGIN * span
    x0, y0 = x0 - pad, y0 - pad
    w, h = (x1 - x0) + pad, (y1 - y0) + pad
    dot = span / 100
    stroke = span / 250

    def pt(name):
        x, y = pegs[name]
        # north is up
        return x, -y

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{_num(width * h / w)}" viewBox="{_num(x0)} {_num(-(y0 + h))} {_num(w)} {_num(h)}">',
        f'<g fill="none" stroke="black" stroke-width="{_num(stroke)}">',
    ]
    for f in doc["figures"]:
        coords = " ".join(f"{_num(x)},{_num(y)}" for x, y in map(pt, f["vertices"]))
        out.append(f'<polygon points="{coords}" class="figure {escape(f["class"])}"/>')
    for c in doc["circles"]:
        cx, cy = pt(c["center"])
        out.append(
            f'<circle cx="{_num(cx)}" cy="{_num(cy)}" r="{_num(scalar_to_float(c["radius"]))}"/>'
        )
    for ln in doc["lines"]:
        (ax, ay), (bx, by) = pt(ln["from"]), pt(ln["to"])
        out.append(f'<line x1="{_num(ax)}" y1="{_num(ay)}" x2="{_num(bx)}" y2="{_num(by)}"/>')
    for c in doc["cords"]:
        (ax, ay), (bx, by) = pt(c["ends"][0]), pt(c["ends"][1])
        out.append(
            f'<line x1="{_num(ax)}" y1="{_num(ay)}" x2="{_num(bx)}" y2="{_num(by)}" '
            f'stroke-dasharray="{_num(4 * stroke)}" class="cord"/>'
        )
    out.append("</g>")
    out.append(f'<g font-size="{_num(4 * dot)}">')
    for name, (x, y) in pegs.items():
        out.append(f'<circle cx="{_num(x)}" cy="{_num(-y)}" r="{_num(dot)}" class="peg"/>')
        out.append(f'<text x="{_num(x + dot)}" y="{_num(-y - dot)}">{escape(name)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
