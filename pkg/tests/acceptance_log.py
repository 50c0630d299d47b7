"""Per-criterion outcomes collected by the acceptance tests and printed at the end of the run."""

CRITERIA = {
    1: "relation suite (typical sweep and random pairs)",
    2: "dimension law",
    3: "irreducibility cross-oracle",
    4: "Berezinian operator",
    5: "character separation",
    6: "Kac structure",
    7: "enveloping algebra identities",
    8: "covariant suite",
    9: "relation removal",
    10: "determinism",
}

RESULTS: dict[int, dict[str, tuple[bool, str]]] = {}


def record(criterion: int, item: str, ok: bool, note: str = "") -> bool:
    RESULTS.setdefault(criterion, {})[item] = (bool(ok), note)
    return ok


def summary_lines() -> list[str]:
    lines = []
    for number, title in CRITERIA.items():
        items = RESULTS.get(number)
        if not items:
            lines.append(f"criterion {number:2d} NOT RUN  {title}")
            continue
        failed = [f"{name}: {note}" if note else name for name, (ok, note) in items.items() if not ok]
        verdict = "FAIL" if failed else "PASS"
        tail = f"  [failed: {'; '.join(failed)}]" if failed else ""
        lines.append(f"criterion {number:2d} {verdict:8s} {title} ({len(items)} checks){tail}")
    return lines
