#!/usr/bin/env python3
# Copyright 2026 The pingpong-ghz Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent cross-check of the attacked-protocol numbers.

Re-transcribes the published attacked states as plain dictionaries, then
computes with sympy everything the C++ tests freeze: Alice's outcome
distributions, Eve's readout, error rates, and the return-leg table rows
forced by the published states. Shares no code with the C++ library.

Run: python3 tests/oracle/published_states_oracle.py
"""
import itertools

import sympy as sp

R2 = sp.sqrt(2)
H = 1 / R2            # 1/sqrt 2
Q = sp.Rational(1, 2)  # 1/2
E = 1 / (2 * R2)      # 1/(2 sqrt 2)

OCC = {"vac": (0, 0), "0": (1, 0), "1": (0, 1), "01": (1, 1)}
MODES = "ABCxy"


def ket(*tokens):
    return tuple(OCC[t] for t in tokens)


def state(*terms):
    out = {}
    for amp, k in terms:
        out[k] = sp.nsimplify(out.get(k, 0) + amp)
    return {k: v for k, v in out.items() if v != 0}


def show(k):
    def lab(o):
        return {(0, 0): "vac", (1, 0): "0", (0, 1): "1", (1, 1): "0,1"}.get(o, str(o))
    return "".join(f"|{lab(o)}>_{m}" for o, m in zip(k, MODES))


OUTBOUND = {
    "B": state((Q, ket("0", "vac", "0", "1", "0")), (Q, ket("0", "1", "0", "1", "vac")),
               (Q, ket("1", "0", "1", "vac", "1")), (Q, ket("1", "0", "1", "0", "vac"))),
    "C": state((Q, ket("0", "1", "0", "vac", "1")), (Q, ket("0", "1", "0", "0", "vac")),
               (Q, ket("1", "0", "vac", "1", "0")), (Q, ket("1", "0", "1", "1", "vac"))),
}

RETURN = {
    ("B", "I"): state((H, ket("0", "1", "0", "vac", "0")), (H, ket("1", "0", "1", "vac", "0"))),
    ("B", "iY"): state((E, ket("0", "1", "0", "vac", "0")), (E, ket("0", "1", "0", "vac", "1")),
                       (Q, ket("0", "vac", "0", "01", "vac")),
                       (-E, ket("1", "vac", "1", "1", "0")), (E, ket("1", "vac", "1", "1", "1")),
                       (-Q, ket("1", "01", "1", "vac", "vac"))),
    ("C", "I"): state((H, ket("0", "1", "0", "vac", "0")), (H, ket("1", "0", "1", "vac", "0"))),
    ("C", "X"): state((E, ket("0", "1", "vac", "1", "0")), (-E, ket("0", "1", "vac", "1", "1")),
                      (Q, ket("0", "1", "01", "vac", "vac")),
                      (E, ket("1", "0", "1", "vac", "0")), (E, ket("1", "0", "1", "vac", "1")),
                      (Q, ket("1", "0", "vac", "01", "vac"))),
    ("C", "iY"): state((-E, ket("0", "1", "vac", "1", "0")), (E, ket("0", "1", "vac", "1", "1")),
                       (-Q, ket("0", "1", "01", "vac", "vac")),
                       (E, ket("1", "0", "1", "vac", "0")), (E, ket("1", "0", "1", "vac", "1")),
                       (Q, ket("1", "0", "vac", "01", "vac"))),
    ("C", "Z"): state((H, ket("0", "1", "0", "vac", "0")), (H, ket("1", "0", "1", "vac", "1"))),
}


def pauli(op, occ):
    n0, n1 = occ
    if op == "I":
        return occ, 1
    if op == "X":
        return (n1, n0), 1
    if op == "iY":
        return (n1, n0), (-1) ** n0
    if op == "Z":
        return occ, (-1) ** n1
    raise ValueError(op)


def encode(st, mode, op):
    i = MODES.index(mode)
    out = {}
    for k, a in st.items():
        occ, s = pauli(op, k[i])
        k2 = k[:i] + (occ,) + k[i + 1:]
        out[k2] = out.get(k2, 0) + s * a
    return {k: sp.simplify(v) for k, v in out.items() if sp.simplify(v) != 0}


def ghz(i):
    first, second = [("000", "111"), ("100", "011"), ("010", "101"), ("110", "001")][(i - 1) // 2]
    sign = 1 if i % 2 else -1
    f = tuple(OCC[c] for c in first)
    s = tuple(OCC[c] for c in second)
    return {f: H, s: sign * H}


BOB_OPS = ["I", "iY"]
CHARLIE_OPS = ["I", "X", "iY", "Z"]
# Encoded GHZ index for each (bob bit, charlie bits) on the initial state.
CODE = {}


def initial():
    return {ket("0", "1", "0", "vac", "0"): H, ket("1", "0", "1", "vac", "0"): H}


def identify(st):
    abc = {k[:3]: v for k, v in st.items()}
    for i in range(1, 9):
        for s in (1, -1):
            g = {k: s * v for k, v in ghz(i).items()}
            if set(g) == set(abc) and all(sp.simplify(g[k] - abc[k]) == 0 for k in g):
                return i, s
    return None


for b, bop in enumerate(BOB_OPS):
    for c, cop in enumerate(CHARLIE_OPS):
        CODE[identify(encode(encode(initial(), "B", bop), "C", cop))[0]] = (b, c)


def outcomes(st):
    """Joint distribution of Alice's category and Eve's (x, y) readout."""
    out = {}
    single = {}
    for k, a in st.items():
        abc = k[:3]
        eve = k[3:]
        cat = None
        for m in range(3):
            if sum(abc[m]) >= 2:
                cat = f"double_photon({MODES[m]})"
                break
        if cat is None:
            for m in range(3):
                if sum(abc[m]) == 0:
                    cat = f"loss({MODES[m]})"
                    break
        if cat is None:
            single.setdefault(eve, {})[abc] = a
            continue
        out[(cat, eve)] = out.get((cat, eve), 0) + a * a
    for eve, part in single.items():
        for i in range(1, 9):
            amp = sum(part.get(k, 0) * v for k, v in ghz(i).items())
            p = sp.simplify(amp * amp)
            if p != 0:
                b, c = CODE[i]
                key = (f"decoded({b},{c:02b})", eve)
                out[key] = out.get(key, 0) + p
    return {k: sp.nsimplify(v) for k, v in out.items()}


def round_state(travel, bob, charlie):
    """Published return state, with the other sender's encoding applied on top."""
    if travel == "B":
        return encode(RETURN[("B", bob)], "C", charlie)
    return encode(RETURN[("C", charlie)], "B", bob)


def category_totals(dist):
    out = {}
    for (cat, _), p in dist.items():
        out[cat] = out.get(cat, 0) + p
    return dict(sorted(out.items()))


def y_pol1(dist):
    return sum(p for (_, eve), p in dist.items() if eve[1] == (0, 1))


def report_scenarios():
    print("== outcome distributions of the published return states")
    for (travel, op), st in RETURN.items():
        assert sp.simplify(sum(v * v for v in st.values()) - 1) == 0
        bob = op if travel == "B" else "I"
        charlie = op if travel == "C" else "I"
        dist = outcomes(round_state(travel, bob, charlie))
        assert sp.simplify(sum(dist.values()) - 1) == 0
        cats = category_totals(dist)
        double = sum(p for c, p in cats.items() if c.startswith("double"))
        print(f"{travel} {op}: {cats}  double={double}  P(y=1)={y_pol1(dist)}")


def report_outbound():
    print("== outbound")
    for travel, st in OUTBOUND.items():
        i = MODES.index(travel)
        loss = sum(v * v for k, v in st.items() if k[i] == (0, 0))
        print(f"{travel}: loss={sp.nsimplify(loss)}")


def report_errors():
    print("== error rates under uniform messages, decodable rounds only")
    for travel in ("B", "C"):
        for sender, width in (("bob", 1), ("charlie", 2)):
            joint = {}
            decodable = 0
            for b, bop in enumerate(BOB_OPS):
                for c, cop in enumerate(CHARLIE_OPS):
                    sent = b if sender == "bob" else c
                    for (cat, _), p in outcomes(round_state(travel, bop, cop)).items():
                        if not cat.startswith("decoded"):
                            continue
                        rb, rc = cat[len("decoded("):-1].split(",")
                        recv = int(rb) if sender == "bob" else int(rc, 2)
                        joint[(sent, recv)] = joint.get((sent, recv), 0) + p / 8
                        decodable += p / 8
            bits = []
            for bit in reversed(range(width)):
                p01 = sum(p for (s, r), p in joint.items() if (s >> bit) & 1 == 0 and (r >> bit) & 1 == 1) / decodable
                p10 = sum(p for (s, r), p in joint.items() if (s >> bit) & 1 == 1 and (r >> bit) & 1 == 0) / decodable
                bits.append((sp.nsimplify(p01), sp.nsimplify(p10)))
            p01 = sum(b[0] for b in bits) / width
            p10 = sum(b[1] for b in bits) / width
            sym = sum(p for (s, r), p in joint.items() if s != r) / decodable
            print(f"eve on {travel}, sender {sender}: decodable={sp.nsimplify(decodable)} p01={p01} p10={p10} "
                  f"bits={bits} symbol_error={sp.nsimplify(sym)}")


def report_eve_readout():
    print("== Eve's readout given the intercepted sender's operation")
    for travel, ops in (("B", BOB_OPS), ("C", CHARLIE_OPS)):
        for op in ops:
            bob = op if travel == "B" else "I"
            charlie = op if travel == "C" else "I"
            dist = outcomes(round_state(travel, bob, charlie))
            eve = {}
            for (_, e), p in dist.items():
                eve[e] = eve.get(e, 0) + p
            pretty = {f"x={show((e[0],))[1:].split('>')[0]},y={show((e[1],))[1:].split('>')[0]}": v
                      for e, v in sorted(eve.items())}
            print(f"{travel} {op}: P(y=1)={y_pol1(dist)} {pretty}")


def report_return_rows():
    """Rows of the return-leg map on (travel, x, y) forced by the published
    states. Both senders face the same map, so their constraints are pooled."""
    print("== return-leg rows forced by the published states")
    pairs = []
    for travel, ops in (("B", BOB_OPS), ("C", CHARLIE_OPS)):
        keep = [MODES.index(travel), 3, 4]
        for op in ops:
            before = encode(OUTBOUND[travel], travel, op)
            after = RETURN[(travel, op)]
            spectators = {}
            for st, slot in ((before, 0), (after, 1)):
                for k, a in st.items():
                    spec = tuple(k[m] for m in range(5) if m not in keep)
                    loc = tuple(k[m] for m in keep)
                    spectators.setdefault(spec, ({}, {}))[slot][loc] = a
            pairs.extend(spectators.values())
    names = {(0, 0): "vac", (1, 0): "0", (0, 1): "1", (1, 1): "0,1"}

    def lab(cfg):
        return "".join(f"|{names[o]}>_{m}" for o, m in zip(cfg, ("t", "x", "y")))

    by_number = {}
    for v, w in pairs:
        by_number.setdefault(sum(map(sum, next(iter(v)))), []).append((v, w))
    for n, cols in sorted(by_number.items()):
        basis = sorted({c for v, w in cols for c in list(v) + list(w)},
                       key=lambda c: [(sum(o), o[1]) for o in c])
        V = sp.Matrix([[v.get(c, 0) for v, _ in cols] for c in basis])
        W = sp.Matrix([[w.get(c, 0) for _, w in cols] for c in basis])
        assert sp.simplify(V.T * V - W.T * W) == sp.zeros(len(cols)), "published states are not isometry-consistent"
        rank = V.rank()
        for i, c in enumerate(basis):
            e = sp.zeros(len(basis), 1)
            e[i] = 1
            if V.row_join(e).rank() != rank:
                continue
            image = sp.simplify(W * (V.pinv() * e))
            terms = [(image[j], basis[j]) for j in range(len(basis)) if image[j] != 0]
            print(f"{lab(c)} -> " + " + ".join(f"({sp.nsimplify(a)}){lab(k)}" for a, k in terms))


if __name__ == "__main__":
    report_outbound()
    report_scenarios()
    report_eve_readout()
    report_errors()
    report_return_rows()
