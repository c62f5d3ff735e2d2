import copy

from gxinduce.catalog import entry_path
from gxinduce.io import decode, decode_scalar, encode_scalar, parse_json
from gxinduce.kernel import Scalar


def doc(name):
    return parse_json(entry_path(name).read_text(encoding="utf-8"))


def negate(sc):
    if isinstance(sc, int):
        return -sc
    return {"conductor": sc["conductor"], "coeffs": [[-p, q] for p, q in sc["coeffs"]]}


def scale(sc, k, conductor):
    """Multiply a scalar entry by zeta_conductor^k."""
    x = decode_scalar(sc, "") * Scalar.zeta(k, conductor)
    return encode_scalar(x, x.n)


def single_entry_perturbations(d, key):
    for i, ent in enumerate(d[key]):
        mat = ent["matrix"]
        for r in range(len(mat)):
            for c in range(len(mat[r])):
                d2 = copy.deepcopy(d)
                d2[key][i]["matrix"][r][c] = negate(mat[r][c])
                yield (key, ent.get("labels") or ent.get("vertex"), r, c), d2


def perturbed(name, key, where, r=0, c=0, how=negate):
    d = copy.deepcopy(doc(name))
    field = "labels" if key == "F" else "vertex"
    for ent in d[key]:
        if ent[field] == list(where):
            ent["matrix"][r][c] = how(ent["matrix"][r][c])
            return decode(d)
    raise KeyError(where)
