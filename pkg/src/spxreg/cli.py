"""Command-line interface.

Exit codes: 0 success, 2 input error (bad file, bad arguments), 3 internal
invariant violation.  All diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .core import LabelMap, extract_superpixels
from .errors import InputError, InternalError, SpxregError
from .formats import load_label_map, save_label_map
from .graph import adjacency_graph, edge_list_text, edge_stats, graph_svg
from .metrics import decomposition_metrics
from .plots import Series, emit_plot
from .report import ReportRecord, write_report
from .studies import (NOISE_FIELDS, SHAPE_FIELDS, noise_sweep, rows_to_csv,
                      shape_table)
from .synth import (NoiseSpec, ShapeKind, hex_grid, make_shape,
                    perturb_boundary, quadtree, square_grid)


def _cmd_eval(args) -> int:
    labels = load_label_map(args.labels)
    gts = [load_label_map(p) for p in args.gt or []]
    decomp = extract_superpixels(labels)
    m = decomposition_metrics(decomp, gts or None, eps=args.eps)
    record = ReportRecord.from_metrics(Path(args.labels).stem, m,
                                       eps=args.eps if gts else None)
    write_report(args.out, [record])
    return 0


def _mask_to_map(shape) -> LabelMap:
    mask, _, _ = shape.mask()
    return LabelMap(mask.astype("int64"))


def _cmd_synth_shape(args) -> int:
    shape = make_shape(ShapeKind(args.kind), args.size)
    if args.noise > 0.0:
        shape = perturb_boundary(shape, NoiseSpec(args.noise, args.rounds, args.seed))
    save_label_map(args.out, _mask_to_map(shape))
    return 0


def _cmd_synth_grid(args) -> int:
    if args.type == "square":
        lm = square_grid(args.width, args.height, args.k)
    else:
        lm = hex_grid(args.width, args.height, args.k)
    save_label_map(args.out, lm)
    return 0


def _cmd_synth_quadtree(args) -> int:
    img = load_label_map(args.image)
    lm = quadtree(img.labels, args.threshold, args.min_block,
                  args.max_block)
    save_label_map(args.out, lm)
    return 0


def _cmd_study_shapes(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")] if args.sizes else [100]
    rows = shape_table(sizes, amplitude=args.noise, rounds=args.rounds,
                       seeds=args.seeds, base_seed=args.seed)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(rows_to_csv(rows, SHAPE_FIELDS))
    if args.plot:
        by_kind: dict[str, list] = {}
        for r in rows:
            by_kind.setdefault(r.kind, []).append(r)
        series = []
        for kind, rs in by_kind.items():
            rs.sort(key=lambda r: r.size)
            series.append(Series(f"C {kind}", tuple(float(r.size) for r in rs),
                                 tuple(r.circularity for r in rs)))
            series.append(Series(f"SRC {kind}", tuple(float(r.size) for r in rs),
                                 tuple(r.src for r in rs)))
        with open(args.plot, "w", encoding="utf-8") as fh:
            fh.write(emit_plot(series, "size (pixels)", "measure",
                               title="circularity vs shape regularity"))
    return 0


def _cmd_study_noise(args) -> int:
    amplitudes = [float(a) for a in args.amplitudes.split(",")]
    rows = noise_sweep(ShapeKind(args.kind), args.size, amplitudes,
                       seeds=args.seeds, rounds=args.rounds, base_seed=args.seed)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(rows_to_csv(rows, NOISE_FIELDS))
    if args.plot:
        xs = tuple(r.amplitude for r in rows)
        series = [Series("C", xs, tuple(r.circularity_mean for r in rows)),
                  Series("SRC", xs, tuple(r.src_mean for r in rows))]
        with open(args.plot, "w", encoding="utf-8") as fh:
            fh.write(emit_plot(series, "noise amplitude", "measure",
                               title=f"noise robustness ({args.kind}, size {args.size})"))
    return 0


def _cmd_graph(args) -> int:
    labels = load_label_map(args.labels)
    decomp = extract_superpixels(labels)
    g = adjacency_graph(decomp)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(graph_svg(decomp, g))
    if args.stats:
        st = edge_stats(g)
        with open(args.stats, "w", encoding="utf-8") as fh:
            fh.write("mean_length,stddev_length,coefficient_of_variation,min,max\n")
            fh.write(f"{st.mean_length:.6f},{st.stddev_length:.6f},"
                     f"{st.coefficient_of_variation:.6f},{st.min_length:.6f},"
                     f"{st.max_length:.6f}\n")
    if args.edges:
        with open(args.edges, "w", encoding="utf-8") as fh:
            fh.write(edge_list_text(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spxreg",
                                description="Shape-regularity evaluation of "
                                            "superpixel decompositions")
    sub = p.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a label map (optionally against ground truth)")
    ev.add_argument("--labels", required=True)
    ev.add_argument("--gt", action="append", default=[],
                    help="ground-truth label map; repeat for multiple annotators")
    ev.add_argument("--eps", type=int, default=2,
                    help="boundary-recall tolerance in pixels (Chebyshev)")
    ev.add_argument("--out", required=True, help="report path (.csv or .json)")
    ev.set_defaults(func=_cmd_eval)

    sy = sub.add_parser("synth", help="generate synthetic shapes and partitions")
    ssub = sy.add_subparsers(dest="synth_command", required=True)

    sh = ssub.add_parser("shape", help="one benchmark shape as a mask")
    sh.add_argument("--kind", required=True, choices=[k.value for k in ShapeKind])
    sh.add_argument("--size", type=int, required=True)
    sh.add_argument("--noise", type=float, default=0.0)
    sh.add_argument("--rounds", type=int, default=1)
    sh.add_argument("--seed", type=int, default=0)
    sh.add_argument("--out", required=True)
    sh.set_defaults(func=_cmd_synth_shape)

    gr = ssub.add_parser("grid", help="square or hexagonal grid partition")
    gr.add_argument("--type", required=True, choices=["square", "hex"])
    gr.add_argument("--width", type=int, required=True)
    gr.add_argument("--height", type=int, required=True)
    gr.add_argument("--k", type=int, required=True)
    gr.add_argument("--out", required=True)
    gr.set_defaults(func=_cmd_synth_grid)

    qt = ssub.add_parser("quadtree", help="variance-driven quadtree partition")
    qt.add_argument("--image", required=True, help="square power-of-two intensity image")
    qt.add_argument("--threshold", type=float, required=True)
    qt.add_argument("--min-block", type=int, default=1)
    qt.add_argument("--max-block", type=int, default=None)
    qt.add_argument("--out", required=True)
    qt.set_defaults(func=_cmd_synth_quadtree)

    st = sub.add_parser("study", help="run the benchmark experiments")
    stsub = st.add_subparsers(dest="study_command", required=True)

    shp = stsub.add_parser("shapes", help="shape table / size sweep")
    shp.add_argument("--sizes", default=None, help="comma-separated sizes (default 100)")
    shp.add_argument("--noise", type=float, default=0.0)
    shp.add_argument("--rounds", type=int, default=1)
    shp.add_argument("--seeds", type=int, default=20)
    shp.add_argument("--seed", type=int, default=0, help="base seed")
    shp.add_argument("--out", required=True)
    shp.add_argument("--plot", default=None, help="optional SVG size-sweep plot")
    shp.set_defaults(func=_cmd_study_shapes)

    noi = stsub.add_parser("noise", help="noise robustness curves")
    noi.add_argument("--kind", required=True, choices=[k.value for k in ShapeKind])
    noi.add_argument("--size", type=int, required=True)
    noi.add_argument("--amplitudes", required=True, help="comma-separated amplitudes")
    noi.add_argument("--seeds", type=int, required=True)
    noi.add_argument("--rounds", type=int, default=1)
    noi.add_argument("--seed", type=int, default=0, help="base seed")
    noi.add_argument("--out", required=True)
    noi.add_argument("--plot", default=None, help="optional SVG robustness plot")
    noi.set_defaults(func=_cmd_study_noise)

    gp = sub.add_parser("graph", help="barycenter adjacency graph overlay")
    gp.add_argument("--labels", required=True)
    gp.add_argument("--out", required=True, help="SVG overlay path")
    gp.add_argument("--stats", default=None, help="optional edge-stats CSV")
    gp.add_argument("--edges", default=None, help="optional edge-list text file")
    gp.set_defaults(func=_cmd_graph)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"spxreg: internal error: {exc}", file=sys.stderr)
        return 3
    except (InputError, OSError, ValueError) as exc:
        print(f"spxreg: {exc}", file=sys.stderr)
        return 2
    except SpxregError as exc:
        print(f"spxreg: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
