"""Writes the JSON fixture corpus. Run from anywhere: python3 fixtures/generate.py"""
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def mon(n, gens=None):
    if gens is None:
        gens = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    return {"ambient_rank": n, "generators": gens}


N0, N1, N2 = mon(0), mon(1), mon(2)
ID1 = [[1]]
ID2 = [[1, 0], [0, 1]]
ZERO_FROM1 = []  # hom from N into the zero monoid
ZERO_FROM2 = []


def write(name, fname, doc):
    d = os.path.join(HERE, name)
    os.makedirs(d, exist_ok=True)
    with open(os.path.join(d, fname), "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")


def two_node_curve(u1, u2):
    g = {
        "vertices": [{"name": "eta1", "stalk": N1}, {"name": "eta2", "stalk": N1}],
        "edges": [
            {"name": "q1", "ends": ["eta1", "eta2"], "stalk": N1, "chi1": ID1, "chi2": ID1},
            {"name": "q2", "ends": ["eta1", "eta2"], "stalk": N1, "chi1": ID1, "chi2": ID1},
        ],
    }
    t = {"u_q": {"q1": [u1], "q2": [u2]}}
    return g, t


# Degenerate two-node curves.
for name, (a, b) in {"ex1": (0, 1), "ex2": (2, 3)}.items():
    g, t = two_node_curve(a, b)
    write(name, "graph.json", g)
    write(name, "type.json", t)

write("ex3", "graph.json", {
    "vertices": [{"name": "eta1", "stalk": N1}, {"name": "eta2", "stalk": N1}],
    "edges": [
        {"name": "q1", "ends": ["eta1", "eta2"], "stalk": N2, "chi1": [[1, 0]], "chi2": [[0, 1]]},
        {"name": "q2", "ends": ["eta1", "eta2"], "stalk": N1, "chi1": ID1, "chi2": ID1},
    ],
})
write("ex3", "type.json", {"u_q": {"q1": [1, 1], "q2": [2]}})

# P^1 relative to a point: chain D4 - D1 - D3 - D2 - D5.
sq_graph = {
    "vertices": [
        {"name": "D1", "stalk": N1}, {"name": "D2", "stalk": N1}, {"name": "D3", "stalk": N1},
        {"name": "D4", "stalk": N0}, {"name": "D5", "stalk": N0},
    ],
    "edges": [
        {"name": "q1", "ends": ["D4", "D1"], "stalk": N1, "chi1": [], "chi2": ID1},
        {"name": "q2", "ends": ["D1", "D3"], "stalk": N1, "chi1": ID1, "chi2": ID1},
        {"name": "q3", "ends": ["D2", "D3"], "stalk": N1, "chi1": ID1, "chi2": ID1},
        {"name": "q4", "ends": ["D5", "D2"], "stalk": N1, "chi1": [], "chi2": ID1},
    ],
    "legs": [
        {"name": "p1", "vertex": "D1", "stalk": N1, "chi": ID1},
        {"name": "p2", "vertex": "D2", "stalk": N1, "chi": ID1},
        {"name": "p3", "vertex": "D3", "stalk": N1, "chi": ID1},
    ],
}
sq_tau = [
    {"vertex": "D4", "point": "q1", "value": [-1]},
    {"vertex": "D5", "point": "q4", "value": [-1]},
]
sq_contacts = {"u_p": {"p1": [0], "p2": [0], "p3": [2]}}
write("squaremonoideg", "graph.json", sq_graph)
write("squaremonoideg", "type.json", {
    "u_q": {"q1": [1], "q2": [1], "q3": [1], "q4": [1]},
    "u_p": sq_contacts["u_p"],
    "tau": sq_tau,
})
write("squaremonoideg", "tau.json", {"tau": sq_tau})
write("squaremonoideg", "contacts.json", sq_contacts)
# V_D1 = V_D2 = 1, V_D3 = 2, V_D4 = V_D5 = 0 with unit edge lengths.
write("squaremonoideg", "point.json", {
    "V": {"D1": [1], "D2": [1], "D3": [2], "D4": [], "D5": []},
    "e": {"q1": 1, "q2": 1, "q3": 1, "q4": 1},
})
write("squaremonoideg", "zero_point.json", {
    "V": {"D1": [0], "D2": [0], "D3": [0], "D4": [], "D5": []},
    "e": {"q1": 0, "q2": 0, "q3": 0, "q4": 0},
})

# Reducible conic through the node of two lines; D3 contracted to the node.
tc_tau = [
    {"vertex": "D1", "point": "q1", "value": [-1, -1]},
    {"vertex": "D2", "point": "q2", "value": [-1, -1]},
]
tc_contacts = {"u_p": {"p11": [1, 0], "p12": [1, 0], "p21": [0, 1], "p22": [0, 1]}}
write("twocomponent", "graph.json", {
    "vertices": [{"name": "D1", "stalk": N0}, {"name": "D2", "stalk": N0}, {"name": "D3", "stalk": N2}],
    "edges": [
        {"name": "q1", "ends": ["D1", "D3"], "stalk": N2, "chi1": [], "chi2": ID2},
        {"name": "q2", "ends": ["D2", "D3"], "stalk": N2, "chi1": [], "chi2": ID2},
    ],
    "legs": [{"name": n, "vertex": "D3", "stalk": N2, "chi": ID2} for n in ("p11", "p12", "p21", "p22")],
})
write("twocomponent", "type.json", {"u_q": {"q1": [1, 1], "q2": [1, 1]}, "u_p": tc_contacts["u_p"], "tau": tc_tau})
write("twocomponent", "tau.json", {"tau": tc_tau})
write("twocomponent", "contacts.json", tc_contacts)

# Plane conic degenerating onto two coordinate lines A, B with four contracted components.
# Fan rays r0 = (-1,-1), r1 = (1,0), r2 = (0,1); stalk coordinates list the rays of the cone.
R0, R1, R2 = [-1, -1], [1, 0], [0, 1]
P1 = [[1, 0]]  # (r_i, r_j) -> r_i
P2 = [[0, 1]]  # (r_i, r_j) -> r_j
vertices = [
    ("A", N1, [R1]), ("B", N1, [R2]),
    ("v1", N2, [R1, R2]), ("v2", N2, [R0, R1]), ("v3", N2, [R0, R2]), ("v4", N2, [R1, R2]),
]
edges = [
    ("q1", "A", "v1", P1, ID2, [R1, R2], [0, 1]),
    ("q2", "v1", "v4", ID2, ID2, [R1, R2], [-1, 1]),
    ("q3", "v4", "B", ID2, P2, [R1, R2], [-1, 0]),
    ("q4", "A", "v2", P2, ID2, [R0, R1], [1, 1]),
    ("q5", "B", "v3", P2, ID2, [R0, R2], [1, 1]),
]
legs = [
    ("x1", "v1", [R1, R2], [1, 0]), ("x2", "v4", [R1, R2], [0, 1]),
    ("x3", "v2", [R0, R1], [1, 0]), ("x4", "v2", [R0, R1], [0, 1]),
    ("x5", "v3", [R0, R2], [1, 0]), ("x6", "v3", [R0, R2], [0, 1]),
]
toric = {
    "vertices": [{"name": n, "stalk": s} for n, s, _ in vertices],
    "edges": [{"name": n, "ends": [a, b], "stalk": N2, "chi1": c1, "chi2": c2} for n, a, b, c1, c2, _, _ in edges],
    "legs": [{"name": n, "vertex": v, "stalk": N2, "chi": ID2} for n, v, _, _ in legs],
    "section_lattice": {
        "rank": 2,
        "vertices": {n: rays for n, _, rays in vertices},
        "edges": {n: rays for n, _, _, _, _, rays, _ in edges},
        "legs": {n: rays for n, _, rays, _ in legs},
    },
}
toric_tau = [
    {"vertex": "A", "point": "q1", "value": [-1, -1]},
    {"vertex": "A", "point": "q4", "value": [-1, 0]},
    {"vertex": "B", "point": "q3", "value": [-1, -1]},
    {"vertex": "B", "point": "q5", "value": [-1, 0]},
]
write("toric_conic", "graph.json", toric)
write("toric_conic", "type.json", {
    "u_q": {n: u for n, _, _, _, _, _, u in edges},
    "u_p": {n: u for n, _, _, u in legs},
    "tau": toric_tau,
})
write("toric_conic", "tau.json", {"tau": toric_tau})
write("toric_conic", "contacts.json", {"u_p": {n: u for n, _, _, u in legs}})
# Edge lengths e1..e5 = 1, 2, 3, 1, 1: V_A = e2 + e3, V_B = e1 + e2.
write("toric_conic", "point.json", {
    "V": {"A": [5], "B": [3], "v1": [5, 1], "v4": [3, 3], "v2": [1, 6], "v3": [1, 4]},
    "e": {"q1": 1, "q2": 2, "q3": 3, "q4": 1, "q5": 1},
})

# Smooth curve relative to a smooth divisor: tangency orders mu at the x legs, y is unconstrained.
for name, mu in {"basicrelative_11": [1, 1], "basicrelative_2": [2]}.items():
    xs = ["x%d" % (i + 1) for i in range(len(mu))]
    graph = {
        "vertices": [{"name": "eta", "stalk": N0}],
        "legs": [{"name": x, "vertex": "eta", "stalk": N1, "chi": []} for x in xs]
        + [{"name": "y1", "vertex": "eta", "stalk": N0, "chi": []}],
    }
    tau = [{"vertex": "eta", "point": x, "value": [-m]} for x, m in zip(xs, mu)]
    up = {x: [m] for x, m in zip(xs, mu)}
    up["y1"] = []
    write(name, "graph.json", graph)
    write(name, "tau.json", {"tau": tau})
    write(name, "type.json", {"u_p": up, "tau": tau})

# Wrong tangency for mu = (2): no balanced type exists.
write("infeasible", "graph.json", {
    "vertices": [{"name": "eta", "stalk": N0}],
    "legs": [{"name": "x1", "vertex": "eta", "stalk": N1, "chi": []}],
})
write("infeasible", "tau.json", {"tau": [{"vertex": "eta", "point": "x1", "value": [-2]}]})
write("infeasible", "contacts.json", {"u_p": {"x1": [1]}})

# One component, no nodes.
write("empty_edge", "graph.json", {"vertices": [{"name": "eta", "stalk": mon(2, [[1, 0], [1, 1], [1, 2]])}]})
write("empty_edge", "type.json", {})

# Two P^1's meeting twice; stalks N^4 at the nodes, N^3 generically.
def elliptic(swap):
    E3 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
    E4 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    S4 = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]] if swap else E4
    return {
        "points": [
            {"name": "q1", "stalk": mon(4)}, {"name": "q2", "stalk": mon(4)},
            {"name": "eta1", "stalk": mon(3)}, {"name": "eta2", "stalk": mon(3)},
        ],
        "specializations": [
            {"from": "q1", "to": "eta1", "hom": E3},
            {"from": "q1", "to": "eta2", "hom": E4},
            {"from": "q2", "to": "eta1", "hom": E3},
            {"from": "q2", "to": "eta2", "hom": S4},
        ],
    }


write("elliptic_swap", "skeleton.json", elliptic(True))
write("elliptic_identity", "skeleton.json", elliptic(False))
write("single_orthant", "skeleton.json", {"points": [{"name": "o", "stalk": N2}]})
write("forest", "skeleton.json", {
    "points": [{"name": "zero", "stalk": N1}, {"name": "infinity", "stalk": N1}, {"name": "generic", "stalk": N0}],
    "specializations": [
        {"from": "zero", "to": "generic", "hom": []},
        {"from": "infinity", "to": "generic", "hom": []},
    ],
})
write("p1_relative", "skeleton.json", {
    "points": [{"name": "zero", "stalk": N1}, {"name": "generic", "stalk": N0}],
    "specializations": [{"from": "zero", "to": "generic", "hom": []}],
})

# Rank 11, not unimodular: beyond the Hilbert basis limit.
big = [[1 if i == j else 0 for j in range(11)] for i in range(10)] + [[1] * 10 + [2], [1] * 11]
write("capacity", "graph.json", {"vertices": [{"name": "eta", "stalk": mon(11, big)}]})
write("capacity", "type.json", {})
