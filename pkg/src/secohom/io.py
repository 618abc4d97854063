"""File formats: triple spec files, cochain files, and deterministic reports.

All scalars are strings ("p/q" over Q, residue strings over GF(p)); all
tables are explicit.  Reports serialize with sorted keys and no
environment-dependent content, so identical inputs give byte-identical
output.
"""

import json
from importlib import resources

from secohom.algebra import Bimodule, FiniteAlgebra, Triple
from secohom.complex import Cochain, CochainComplex
from secohom.errors import SecohomError, SpecFileError, ValidationError
from secohom.fields import field_from_name

TRIPLE_FORMAT = "secohom-triple/1"
COCHAIN_FORMAT = "secohom-cochain/1"
REPORT_FORMAT = "secohom-report/1"


class TripleSpec:
    """A parsed spec file: the triple plus its named bimodules."""

    def __init__(self, name, field, triple, modules):
        self.name = name
        self.field = field
        self.triple = triple
        self.modules = modules

    def module(self, name):
        if name not in self.modules:
            raise SpecFileError(
                f"{self.name}: no module named {name!r} (have {sorted(self.modules)})"
            )
        return self.modules[name]


def _parse_algebra(field, node, where):
    try:
        dim = node["dim"]
        mult = [
            [[field(c) for c in node["mult"][i][j]] for j in range(dim)]
            for i in range(dim)
        ]
        unit = [field(c) for c in node["unit"]]
        labels = node.get("labels")
    except (KeyError, IndexError, TypeError, ValueError) as e:
        raise SpecFileError(f"{where}: malformed algebra table: {e}") from None
    try:
        return FiniteAlgebra(field, mult, unit, labels=labels)
    except ValidationError as e:
        raise SpecFileError(f"{where}: {e}") from None


def load_triple_spec(path):
    """Load and fully validate a triple spec file."""
    try:
        with open(path, "rb") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SpecFileError(f"{path}: {e}") from None
    except json.JSONDecodeError as e:
        raise SpecFileError(f"{path}: invalid JSON: {e}") from None
    return parse_triple_spec(doc, str(path))


def parse_triple_spec(doc, name):
    if doc.get("format") != TRIPLE_FORMAT:
        raise SpecFileError(f"{name}: expected format {TRIPLE_FORMAT!r}")
    try:
        field = field_from_name(doc["field"])
    except (KeyError, ValueError) as e:
        raise SpecFileError(f"{name}: field: {e}") from None
    A = _parse_algebra(field, doc.get("A", {}), f"{name}: A")
    B = _parse_algebra(field, doc.get("B", {}), f"{name}: B")
    try:
        eps_rows = doc["eps"]
        cols = [
            [field(eps_rows[i][j]) for i in range(A.dim)] for j in range(B.dim)
        ]
    except (KeyError, IndexError, TypeError, ValueError) as e:
        raise SpecFileError(f"{name}: eps: {e}") from None
    try:
        triple = Triple(A, B, cols)
    except ValidationError as e:
        raise SpecFileError(f"{name}: eps: {e}") from None

    modules = {}
    for mod_name, node in doc.get("modules", {}).items():
        where = f"{name}: modules.{mod_name}"
        try:
            mdim = node["dim"]
            left = [
                [[field(c) for c in node["left"][i][r]] for r in range(mdim)]
                for i in range(A.dim)
            ]
            right = [
                [[field(c) for c in node["right"][i][r]] for r in range(mdim)]
                for i in range(A.dim)
            ]
        except (KeyError, IndexError, TypeError, ValueError) as e:
            raise SpecFileError(f"{where}: malformed action tables: {e}") from None
        try:
            modules[mod_name] = Bimodule(triple, left, right)
        except ValidationError as e:
            raise SpecFileError(f"{where}: {e}") from None
    if not modules:
        raise SpecFileError(f"{name}: spec declares no modules")
    return TripleSpec(name, field, triple, modules)


def triple_spec_to_doc(triple, modules, labels=True):
    field = triple.field

    def alg(a):
        node = {
            "dim": a.dim,
            "mult": [
                [[field.format(c) for c in a.mult[i][j]] for j in range(a.dim)]
                for i in range(a.dim)
            ],
            "unit": [field.format(c) for c in a.unit],
        }
        if labels:
            node["labels"] = list(a.labels)
        return node

    doc = {
        "format": TRIPLE_FORMAT,
        "field": field.name,
        "A": alg(triple.A),
        "B": alg(triple.B),
        "eps": [
            [field.format(triple.eps_cols[j][i]) for j in range(triple.B.dim)]
            for i in range(triple.A.dim)
        ],
        "modules": {},
    }
    for name, mod in modules.items():
        doc["modules"][name] = {
            "dim": mod.dim,
            "left": [
                [[field.format(c) for c in row] for row in tbl] for tbl in mod.left
            ],
            "right": [
                [[field.format(c) for c in row] for row in tbl] for tbl in mod.right
            ],
        }
    return doc


def bundled_spec_names():
    return sorted(
        r.name[: -len(".json")]
        for r in resources.files("secohom.data").iterdir()
        if r.name.endswith(".json")
    )


def load_bundled_spec(name):
    ref = resources.files("secohom.data").joinpath(f"{name}.json")
    if not ref.is_file():
        raise SpecFileError(
            f"no bundled spec {name!r} (have {bundled_spec_names()})"
        )
    doc = json.loads(ref.read_text())
    return parse_triple_spec(doc, name)


def resolve_spec(name_or_path):
    """A path wins; otherwise fall back to the bundled specs."""
    import os

    if os.path.exists(name_or_path):
        return load_triple_spec(name_or_path)
    return load_bundled_spec(name_or_path)


# ----------------------------------------------------------------------
# cochains


def cochain_to_doc(f, module_name):
    cx = f.complex
    field = cx.field
    entries = {}
    for off, vec in enumerate(f.table):
        if any(c != 0 for c in vec):
            entries[str(off)] = [field.format(c) for c in vec]
    return {
        "format": COCHAIN_FORMAT,
        "flavor": cx.flavor,
        "degree": f.degree,
        "module": module_name,
        "entries": entries,
    }


def load_cochain_file(path, spec, max_basis=None):
    try:
        with open(path, "rb") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SpecFileError(f"{path}: {e}") from None
    except json.JSONDecodeError as e:
        raise SpecFileError(f"{path}: invalid JSON: {e}") from None
    if doc.get("format") != COCHAIN_FORMAT:
        raise SpecFileError(f"{path}: expected format {COCHAIN_FORMAT!r}")
    module_name = doc.get("module", "regular")
    mod = spec.module(module_name)
    kwargs = {} if max_basis is None else {"max_basis": max_basis}
    cx = CochainComplex(spec.triple, mod, flavor=doc.get("flavor", "secondary"), **kwargs)
    n = doc["degree"]
    count = cx.basis(n).count
    field = spec.field
    table = [[0] * mod.dim for _ in range(count)]
    for key, vec in doc.get("entries", {}).items():
        try:
            off = int(key)
            if not 0 <= off < count:
                raise ValueError(f"offset {off} out of range (basis count {count})")
            table[off] = [field(c) for c in vec]
            if len(table[off]) != mod.dim:
                raise ValueError("wrong vector length")
        except (TypeError, ValueError) as e:
            raise SpecFileError(f"{path}: entry {key!r}: {e}") from None
    return Cochain(cx, n, table, _freeze=False), cx, module_name


# ----------------------------------------------------------------------
# reports


def emit_report(obj):
    """Canonical bytes: sorted keys, two-space indent, trailing newline."""
    doc = {"format": REPORT_FORMAT}
    doc.update(obj)
    return (json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n").encode()
