"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 internal
invariant failure.
"""
from __future__ import annotations

import json
import sys

import click

from .cluster import (diagram_dot, enumerate_cluster_variables, mutation_diagram,
                      theorem_label)
from .crystal import (component_dot, crystal_component, crystal_stats, default_p,
                      demazure_monomials)
from .errors import ClusterCrystalError, InvariantViolation
from .laurent import parse_monomial
from .minors import evaluate_minor, initial_seed
from .roots import CartanData, ReducedWord, coxeter_square_word
from .verifier import full_verification

KIND = click.Choice(["A", "B", "C", "D", "a", "b", "c", "d"])


def _cd(kind, rank):
    try:
        return CartanData.parse(kind, rank)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _word(text, cd=None):
    """Comma-separated letters; empty string means the identity."""
    if text is None or text.strip() in ("", "e"):
        return ()
    try:
        letters = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise click.UsageError(f"bad word {text!r}; expected e.g. 1,2,1")
    if cd is not None and any(not 1 <= x <= cd.rank for x in letters):
        raise click.UsageError(f"letters of {text!r} must lie in [1, {cd.rank}]")
    return letters


def _mono(text, cd):
    try:
        return parse_monomial(text, cd.rank)
    except (ValueError, ClusterCrystalError) as exc:
        raise click.UsageError(f"bad monomial {text!r}: {exc}")


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _seed_names(seed):
    mut = seed.mutable
    return {k: (f"x{k}*" if k in mut else f"x{k}") for k in seed.matrix.rows}


def _seed_text(seed):
    lines = [f"seed {seed.cd}  word {','.join(map(str, seed.word.letters)) if seed.word else '-'}"]
    for k in seed.matrix.rows:
        role = "mutable" if k in seed.mutable else "frozen "
        lines.append(f"  x{k:<3} {role} {seed.vars[k].render()}")
    lines.append("diagram:")
    for (a, b), lab in sorted(mutation_diagram(seed).items()):
        tag = "" if lab == 1 else f"  [{lab}]"
        lines.append(f"  x{a} -> x{b}{tag}")
    return "\n".join(lines)


out_option = click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
                          help="Write output to FILE instead of stdout.")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Cluster variables of C[G^{e,c^2}] and Demazure crystals."""


@main.command()
@click.argument("kind", type=KIND)
@click.argument("rank", type=int)
@click.option("--word", default=None, help="Reduced word (default: the doubled Coxeter word).")
@click.option("--json", "as_json", is_flag=True)
@click.option("--dot", is_flag=True, help="Print the mutation diagram as DOT.")
@out_option
def seed(kind, rank, word, as_json, dot, out):
    """Initial seed and its mutation diagram."""
    cd = _cd(kind, rank)
    w = ReducedWord(_word(word, cd)) if word else coxeter_square_word(cd)
    try:
        s = initial_seed(cd, w)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if dot:
        _emit(diagram_dot(mutation_diagram(s), _seed_names(s), name=f"seed_{cd}"), out)
    elif as_json:
        _emit(s.dumps(), out)
    else:
        _emit(_seed_text(s), out)


@main.command()
@click.argument("kind", type=KIND)
@click.argument("rank", type=int)
@click.option("--fund", "j", type=int, required=True, help="Fundamental weight index j.")
@click.option("--w", "w", default="", help="Weyl word w for Delta_{L_j, w L_j}, e.g. 1,2.")
@click.option("--word", default=None, help="Chart word (default: the doubled Coxeter word).")
@click.option("--json", "as_json", is_flag=True)
@out_option
def minor(kind, rank, j, w, word, as_json, out):
    """Evaluate Delta_{L_j, w L_j} on the factorized chart."""
    cd = _cd(kind, rank)
    if not 1 <= j <= cd.rank:
        raise click.UsageError(f"--fund must lie in [1, {cd.rank}]")
    chart = ReducedWord(_word(word, cd)) if word else coxeter_square_word(cd)
    val = evaluate_minor(cd, chart, j, _word(w, cd))
    if as_json:
        _emit(json.dumps({"type": str(cd), "j": j, "w": list(_word(w, cd)),
                          "value": val.render(), "terms": val.to_json()}, sort_keys=True), out)
    else:
        _emit(val.render(), out)


@main.command()
@click.argument("kind", type=KIND)
@click.argument("rank", type=int)
@click.option("--seq", required=True,
              help="Mutations in the order performed, as theorem labels 1..r (e.g. 3,2).")
@click.option("--engine-labels", is_flag=True, help="Interpret --seq as engine indices r+1..2r.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--dot", is_flag=True)
@out_option
def mutate(kind, rank, seq, engine_labels, as_json, dot, out):
    """Mutate the initial seed along a sequence."""
    cd = _cd(kind, rank)
    s = initial_seed(cd)
    for k in _word(seq):
        idx = k if engine_labels else None
        if idx is None:
            if not 1 <= k <= cd.rank:
                raise click.UsageError(f"label {k} outside [1, {cd.rank}]")
            idx = theorem_label(cd, k)
        elif idx not in s.mutable:
            raise click.UsageError(f"{idx} is not a mutable index")
        s = s.mutate(idx)
    if dot:
        _emit(diagram_dot(mutation_diagram(s), _seed_names(s), name=f"seed_{cd}"), out)
    elif as_json:
        _emit(s.dumps(), out)
    else:
        _emit(_seed_text(s), out)


@main.command(name="enumerate")
@click.argument("kind", type=KIND)
@click.argument("rank", type=int)
@click.option("--threads", type=int, default=1, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@out_option
def enumerate_cmd(kind, rank, threads, as_json, out):
    """All cluster variables reachable from the initial seed."""
    cd = _cd(kind, rank)
    vs = sorted(enumerate_cluster_variables(initial_seed(cd), threads=threads),
                key=lambda p: p.sort_key())
    if as_json:
        _emit(json.dumps({"type": str(cd), "count": len(vs),
                          "almost_positive_roots": cd.almost_positive_count(),
                          "variables": [v.render() for v in vs]}, indent=2), out)
    else:
        lines = [f"{len(vs)} cluster variables ({cd.almost_positive_count()} almost positive roots)"]
        lines += [v.render() for v in vs]
        _emit("\n".join(lines), out)


@main.command()
@click.argument("kind", type=KIND)
@click.argument("rank", type=int)
@click.option("--highest", required=True, help="Monomial, e.g. 'Y[1,1]'.")
@click.option("--cap", type=int, default=20000, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--dot", is_flag=True)
@out_option
def crystal(kind, rank, highest, cap, as_json, dot, out):
    """Connected component of a monomial in the monomial realization."""
    cd = _cd(kind, rank)
    m = _mono(highest, cd)
    verts, edges = crystal_component(cd, default_p(cd), m, cap=cap)
    if dot:
        _emit(component_dot(cd, verts, edges), out)
        return
    vs = sorted(verts)
    es = sorted(edges, key=lambda t: (t[0].key, t[1], t[2].key))
    if as_json:
        _emit(json.dumps({"type": str(cd), "vertices": [v.render() for v in vs],
                          "edges": [[a.render(), i, b.render()] for a, i, b in es]}, indent=2), out)
    else:
        lines = [f"{len(vs)} vertices, {len(es)} edges"]
        for a, i, b in es:
            lines.append(f"{a.render()} -{i}-> {b.render()}")
        _emit("\n".join(lines), out)


@main.command()
@click.argument("kind", type=KIND)
@click.argument("rank", type=int)
@click.option("--highest", required=True, help="Highest monomial, e.g. 'Y[1,2]'.")
@click.option("--word", default="", help="Weyl word s_{w1} s_{w2} ..., e.g. 1,2.")
@click.option("--json", "as_json", is_flag=True)
@out_option
def demazure(kind, rank, highest, word, as_json, out):
    """Monomials of a Demazure crystal."""
    cd = _cd(kind, rank)
    m = _mono(highest, cd)
    ms = sorted(demazure_monomials(cd, default_p(cd), m, _word(word, cd)))
    if as_json:
        _emit(json.dumps({"type": str(cd), "highest": m.render(), "word": list(_word(word, cd)),
                          "monomials": [x.render() for x in ms]}, indent=2), out)
    else:
        lines = [f"{len(ms)} monomials"]
        for x in ms:
            wt = crystal_stats(cd, x)[0]
            lines.append(f"{x.render()}  wt={list(wt)}")
        _emit("\n".join(lines), out)


@main.command()
@click.argument("kind", type=KIND)
@click.argument("rank", type=int)
@click.option("--item", default=None, help="Restrict to one item, e.g. C.iii.")
@click.option("--threads", type=int, default=1, show_default=True)
@click.option("--strict", is_flag=True, help="Use the stated item ranges only (no k = r-1 extension).")
@click.option("--json", "as_json", is_flag=True)
@out_option
def verify(kind, rank, item, threads, strict, as_json, out):
    """Check theorem cases, identities and global coverage; exit 1 on mismatch."""
    cd = _cd(kind, rank)
    if cd.kind not in "BCD":
        raise click.UsageError("verification covers types B, C and D")
    if cd.rank > 5:
        raise click.UsageError("verification is budgeted for rank <= 5")
    summ = full_verification(cd, item=item, threads=threads, extended=not strict)
    if item is not None and not summ.cases:
        raise click.UsageError(f"no cases for item {item!r} in {cd}")
    if as_json:
        _emit(summ.dumps(), out)
    else:
        lines = [f"{cd}: {'PASS' if summ.ok else 'FAIL'}, {summ.matched}/{summ.enumerated} variables matched"]
        for c in summ.cases:
            ext = " (extended range)" if c["extension"] else ""
            lines.append(f"  {c['status']} {c['id']}{ext}")
            for msg in c["mismatches"]:
                lines.append(f"      {msg}")
        for i in summ.identities:
            lines.append(f"  {'PASS' if i['holds'] else 'FAIL'} identity {i['id']}")
        for u in summ.unmatched:
            lines.append(f"  unmatched variable {u}")
        lines.append(f"  diagram rewrite checks: {summ.rewrites['steps']} steps, "
                     f"{summ.rewrites['mismatches']} mismatches, "
                     f"{summ.rewrites['skipped_triangles']} triangles outside the listed patterns")
        _emit("\n".join(lines), out)
    if not summ.ok:
        raise SystemExit(1)


def run():
    try:
        main.main(standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        sys.exit(2)
    except click.exceptions.Abort:
        sys.exit(2)
    except InvariantViolation as exc:
        click.echo(f"internal invariant failure: {exc}", err=True)
        sys.exit(3)
    except ClusterCrystalError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except SystemExit:
        raise
    sys.exit(0)


if __name__ == "__main__":
    run()
