"""Line-oriented code configuration files and the decoder-table text format.

A file is a list of ``[section]`` headers followed by ``key = value`` lines;
keys such as ``gen``, ``point`` and ``L`` may repeat and keep their order::

    [field]
    p = 2
    k = 2
    primitive = 1,1,1
    [ring]
    vars = x, y
    [variety]
    gen = y^2 + y + x^3
    [code]
    L = 1
    L = x
    t = 1
    [decoder]
    ghost = 1,1

Tables files are configuration files with an extra ``[tables]`` section.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .code import AffineVarietyCode
from .decoder import DecoderTables
from .gf import FieldError, FieldSpec, ParseError, make_field, pinned_field
from .ideals import DecodingIdealSpec, LocatorSet, choose_ghost_point, evaluator_ring, slot_ring
from .mpoly import Ring, format_poly, parse_poly

_SECTIONS = {"field", "ring", "variety", "code", "decoder", "tables"}
_REPEATABLE = {"gen", "point", "L", "locator"}


class ConfigError(ValueError):
    pass


@dataclass
class RawConfig:
    sections: dict = field(default_factory=dict)  # name -> list of (key, value, lineno)

    def get(self, section, key, default=None):
        vals = [v for k, v, _ in self.sections.get(section, []) if k == key]
        if not vals:
            return default
        return vals[-1]

    def get_all(self, section, key) -> list[str]:
        return [v for k, v, _ in self.sections.get(section, []) if k == key]

    def require(self, section, key):
        v = self.get(section, key)
        if v is None:
            raise ConfigError(f"missing [{section}] {key}")
        return v


def parse_text(text: str) -> RawConfig:
    cfg = RawConfig()
    current = None
    seen: dict = {}
    for n, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"\[(\w+)\]", line)
        if m:
            current = m.group(1)
            if current not in _SECTIONS:
                raise ConfigError(f"line {n}: unknown section [{current}]")
            cfg.sections.setdefault(current, [])
            continue
        if current is None:
            raise ConfigError(f"line {n}: key outside of any section")
        if "=" not in line:
            raise ConfigError(f"line {n}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _REPEATABLE and not key.startswith("meta.") and (current, key) in seen:
            raise ConfigError(f"line {n}: duplicate key {key} (first on line {seen[(current, key)]})")
        seen[(current, key)] = n
        cfg.sections[current].append((key, value, n))
    return cfg


def _int(cfg, section, key, default=None) -> int:
    v = cfg.get(section, key)
    if v is None:
        if default is None:
            raise ConfigError(f"missing [{section}] {key}")
        return default
    try:
        return int(v)
    except ValueError:
        raise ConfigError(f"[{section}] {key} must be an integer, got {v!r}") from None


def _split(text: str) -> list[str]:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return [s.strip() for s in text.split(",") if s.strip()]


def parse_elements(F: FieldSpec, text: str) -> tuple:
    try:
        return tuple(F.parse_int(s) for s in _split(text))
    except (ParseError, ValueError) as exc:
        raise ConfigError(f"bad element list {text!r}: {exc}") from None


def format_elements(F: FieldSpec, vals) -> str:
    return ",".join(F.format_int(v) for v in vals)


@dataclass
class CodeConfig:
    raw: RawConfig
    code: AffineVarietyCode
    ghost: tuple | None
    coordinate_order: list | None
    variant: str
    name: str
    source: str = ""

    def spec(self, variant=None, coordinate_order=None, ghost=None) -> DecodingIdealSpec:
        variant = variant or self.variant
        g = ghost if ghost is not None else self.ghost
        if g is None and variant == "STAR":
            g = choose_ghost_point(self.code)
        order = coordinate_order if coordinate_order is not None else self.coordinate_order
        try:
            return DecodingIdealSpec(self.code, variant, g, order)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None


def build_field(cfg: RawConfig) -> FieldSpec:
    p = _int(cfg, "field", "p")
    k = _int(cfg, "field", "k", 1)
    prim = cfg.get("field", "primitive")
    try:
        if prim is None:
            return pinned_field(p ** k)
        return make_field(p, k, [int(c) for c in _split(prim)])
    except (FieldError, KeyError, ValueError) as exc:
        raise ConfigError(f"bad field: {exc}") from None


def load_config_text(text: str, source: str = "") -> CodeConfig:
    cfg = parse_text(text)
    F = build_field(cfg)
    names = _split(cfg.require("ring", "vars"))
    try:
        R = Ring(F, names)
        gens = [parse_poly(g, R) for g in cfg.get_all("variety", "gen")]
        L = [parse_poly(b, R) for b in cfg.get_all("code", "L")]
    except (ParseError, ValueError, KeyError) as exc:
        raise ConfigError(f"bad polynomial: {exc}") from None
    if not L:
        raise ConfigError("[code] needs at least one L")
    t = _int(cfg, "code", "t")
    pts = [parse_elements(F, P) for P in cfg.get_all("variety", "point")] or None
    name = cfg.get("decoder", "name") or (Path(source).stem if source else "code")
    try:
        code = AffineVarietyCode.build(R, gens, L, t, pts, name=name)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    ghost = cfg.get("decoder", "ghost")
    ghost = parse_elements(F, ghost) if ghost else None
    order = cfg.get("decoder", "coordinate_order")
    order = _split(order) if order else None
    variant = cfg.get("decoder", "variant", "STAR")
    return CodeConfig(cfg, code, ghost, order, variant, name, source)


def load_config(path) -> CodeConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None
    return load_config_text(text, str(path))


def fixture_names() -> list[str]:
    root = resources.files("avcodes") / "fixtures"
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".cfg"))


def fixture_text(name: str) -> str:
    f = resources.files("avcodes") / "fixtures" / f"{name}.cfg"
    if not f.is_file():
        raise ConfigError(f"no fixture named {name!r}; known: {', '.join(fixture_names())}")
    return f.read_text()


def load_fixture(name: str) -> CodeConfig:
    return load_config_text(fixture_text(name), f"{name}.cfg")


def resolve_config(arg: str) -> CodeConfig:
    """A path, or the name of a bundled fixture."""
    if Path(arg).exists():
        return load_config(arg)
    if "/" not in arg and not arg.endswith(".cfg"):
        return load_fixture(arg)
    return load_config(arg)


# ---------------------------------------------------------------------------
# tables


def _config_lines(cc: CodeConfig, spec: DecodingIdealSpec) -> list[str]:
    code = cc.code
    F = code.field
    poly = F.primitive_poly
    out = ["[field]", f"p = {F.p}", f"k = {F.k}", f"primitive = {','.join(map(str, poly))}",
           "[ring]", f"vars = {', '.join(code.ring.names)}", "[variety]"]
    out += [f"gen = {x}" for x in cc.raw.get_all("variety", "gen")]
    out += [f"point = {format_elements(F, P)}" for P in code.points]
    out += ["[code]"] + [f"L = {format_poly(b)}" for b in code.L] + [f"t = {code.t}"]
    out += ["[decoder]", f"name = {cc.name}", f"variant = {spec.variant}"]
    if spec.ghost is not None:
        out.append(f"ghost = {format_elements(F, spec.ghost)}")
    out.append(f"coordinate_order = {', '.join(spec.coords)}")
    return out


def dump_tables(cc: CodeConfig, tables: DecoderTables) -> str:
    spec = tables.spec
    lines = ["# decoder tables", *_config_lines(cc, spec), "[tables]",
             f"flavor = {tables.flavor}",
             f"locator_ring = {', '.join(spec.ring('locator').names[:spec.r + spec.m])}"]
    lines += [f"locator = {format_poly(g)}" for g in tables.locators.locators]
    if tables.evaluator is not None:
        lines.append(f"evaluator = {format_poly(tables.evaluator)}")
    lines += [f"meta.{k} = {v}" for k, v in tables.meta.items()]
    return "\n".join(lines) + "\n"


def load_tables_text(text: str, source: str = "") -> tuple[CodeConfig, DecoderTables]:
    cc = load_config_text(text, source)
    cfg = cc.raw
    if "tables" not in cfg.sections:
        raise ConfigError("not a tables file: missing [tables]")
    spec = cc.spec()
    flavor = cfg.require("tables", "flavor")
    if flavor not in ("weak", "stuffed"):
        raise ConfigError(f"unknown flavor {flavor!r}")
    texts = cfg.get_all("tables", "locator")
    wanted = spec.m if spec.t else 0
    if len(texts) != wanted:
        raise ConfigError(f"expected {wanted} locators, found {len(texts)}")
    try:
        locs = [parse_poly(g, slot_ring(spec, i)) for i, g in enumerate(texts, start=1)]
        ev = cfg.get("tables", "evaluator")
        ev = parse_poly(ev, evaluator_ring(spec)) if ev else None
    except (ParseError, ValueError, KeyError) as exc:
        raise ConfigError(f"bad table polynomial: {exc}") from None
    degs = [g.degree(g.ring.nvars - 1) for g in locs]
    meta = {k[5:]: v for k, v, _ in cfg.sections["tables"] if k.startswith("meta.")}
    ls = LocatorSet(locs, degs, flavor, spec.block_names(spec.t) if spec.t else [])
    return cc, DecoderTables(spec, ls, ev, meta)


def load_tables(path) -> tuple[CodeConfig, DecoderTables]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None
    return load_tables_text(text, str(path))
