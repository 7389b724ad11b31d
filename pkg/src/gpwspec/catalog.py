"""Built-in instances, written in the instance file format."""

from __future__ import annotations

from .instances import Instance, InstanceSpec, build_instance, parse_text

_SOURCES = {
    "z4_trivial": """
        name z4_trivial
        grading 2
        ring A integers_mod 4
        module M self A
    """,
    "z5_trivial": """
        name z5_trivial
        grading 2
        ring A integers_mod 5
        module M self A
    """,
    "z6_trivial": """
        name z6_trivial
        grading 2
        ring A integers_mod 6
        module M self A
    """,
    "z12_trivial": """
        name z12_trivial
        grading 2
        ring A integers_mod 12
        module M self A
    """,
    "gr2_z2": """
        name gr2_z2
        grading 2
        ring A group_ring 2
        module M self A
    """,
    "gr4_z2": """
        name gr4_z2
        grading 2
        ring A group_ring 4
        module M self A
    """,
    "gr4_z2_mod2": """
        name gr4_z2_mod2
        grading 2
        ring A group_ring 4
        ring B quotient A 2
        module M self B
    """,
    "free2_z2": """
        name free2_z2
        grading 2
        ring A integers_mod 2
        module F free A 0 0
    """,
    "free2_z4": """
        name free2_z4
        grading 2
        ring A integers_mod 4
        module F free A 0 0
    """,
    "free2_gr2": """
        name free2_gr2
        grading 2
        ring A group_ring 2
        module F free A 0 1
    """,
    "free1_gr2_shift": """
        name free1_gr2_shift
        grading 2
        ring A group_ring 2
        module F free A 1
    """,
    "z4_mod2": """
        name z4_mod2
        grading 2
        ring A integers_mod 4
        module N self A
        module Q quotient N 2
    """,
    "z6_mod2": """
        name z6_mod2
        grading 2
        ring A integers_mod 6
        module N self A
        module Q quotient N 2
    """,
}


def catalog_names() -> list[str]:
    return sorted(_SOURCES)


def catalog_text(name: str) -> str:
    try:
        src = _SOURCES[name]
    except KeyError:
        raise KeyError(f"no catalog instance named {name!r}") from None
    return "\n".join(line.strip() for line in src.strip().splitlines()) + "\n"


def catalog_spec(name: str) -> InstanceSpec:
    return parse_text(catalog_text(name))


def catalog_instance(name: str, max_size: int | None = None) -> Instance:
    return build_instance(catalog_spec(name), max_size)


def catalog_instances(max_size: int | None = None) -> list[Instance]:
    return [catalog_instance(n, max_size) for n in catalog_names()]
