import gzip
import json
import math
from typing import Iterable, Optional, Union

import pandas as pd

from pancake_clique.classes.graph import Graph
from pancake_clique.classes.instance import Instance
from pancake_clique.classes.ordering import CliqueResult, CneeoFailure
from pancake_clique.classes.reports import MiddleMode, TransversalReport
from pancake_clique.classes.shapes import Circle, Pancake2, UnitDisk
from pancake_clique.exceptions import ContractViolation, InstanceFormatError, InvalidOrdering

__all__ = [
    "BENCH_COLUMNS",
    "instance_to_dict",
    "instance_from_dict",
    "write_instance",
    "read_instance",
    "result_to_dict",
    "write_result",
    "read_result",
    "transversal_report_to_dict",
    "write_transversal_report",
    "partition_to_dict",
    "write_partition",
    "write_bench_csv",
    "read_bench_csv",
]

BENCH_COLUMNS = ["kind", "n_objects", "seed", "method", "size", "elapsed_ms", "validated"]


def __opener(path: str, compress: Optional[bool]):
    if compress is None:
        compress = str(path).endswith(".gz")
    if compress:
        return gzip.open
    return open


def __dump(doc: dict, path: str, compress: Optional[bool]) -> None:
    js_dmp = json.dumps(doc, indent=2, allow_nan=False)
    op = __opener(path, compress)
    with op(path, "wt") as f:
        f.write(js_dmp)
        f.write("\n")


def __load(path: str, compress: Optional[bool]) -> dict:
    op = __opener(path, compress)
    try:
        with op(path, "rt") as f:
            data = json.loads(f.read())
    except (json.JSONDecodeError, UnicodeDecodeError, OSError, EOFError) as e:
        raise InstanceFormatError(f"{path}: not a JSON document ({e})")
    if not isinstance(data, dict):
        raise InstanceFormatError(f"{path}: expected a JSON object, got {type(data).__name__}")
    return data


def __number(obj: dict, key: str, where: str) -> float:
    if key not in obj:
        raise InstanceFormatError(f"{where}: missing field {key!r}")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise InstanceFormatError(f"{where}: field {key!r} must be a finite number, got {value!r}")
    return float(value)


def __index(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InstanceFormatError(f"{where}: expected an integer, got {value!r}")
    return value


def __object_to_dict(o) -> dict:
    if isinstance(o, UnitDisk):
        return {"kind": "unit_disk", "cx": o.center.x, "cy": o.center.y}
    if isinstance(o, Pancake2):
        return {"kind": "pancake", "x1": o.x1, "x2": o.x2}
    if isinstance(o, Circle):
        return {"kind": "circle", "cx": o.center.x, "cy": o.center.y, "r": o.radius}
    raise TypeError(f"cannot serialise a {type(o).__name__}")


def __object_from_dict(obj, where: str):
    if not isinstance(obj, dict):
        raise InstanceFormatError(f"{where}: expected an object, got {obj!r}")
    kind = obj.get("kind")
    try:
        if kind == "unit_disk":
            return UnitDisk.at(__number(obj, "cx", where), __number(obj, "cy", where))
        if kind == "pancake":
            return Pancake2(__number(obj, "x1", where), __number(obj, "x2", where))
        if kind == "circle":
            return Circle.at(__number(obj, "cx", where), __number(obj, "cy", where), __number(obj, "r", where))
    except InstanceFormatError:
        raise
    except ValueError as e:
        raise InstanceFormatError(f"{where}: {e}")
    raise InstanceFormatError(f"{where}: unknown object kind {kind!r}")


def instance_to_dict(inst: Instance) -> dict:
    """
    JSON document of an instance.

    :param inst: Instance
    :return: dict with ``kind``, ``objects`` and, when present, ``triple`` or ``graph``
    """
    doc = {"kind": inst.kind, "objects": [__object_to_dict(o) for o in inst.objects]}
    if inst.triple is not None:
        doc["triple"] = list(inst.triple)
    if inst.graph is not None:
        doc["graph"] = {"n": inst.graph.number_of_nodes(), "edges": [list(e) for e in inst.graph.edges()]}
    return doc


def instance_from_dict(doc: dict, where: str = "instance") -> Instance:
    """
    Instance described by a JSON document.

    :param doc: parsed document
    :param where: prefix of error messages
    :return: Instance
    :raise InstanceFormatError: on malformed documents
    """
    objects = doc.get("objects", [])
    if not isinstance(objects, list):
        raise InstanceFormatError(f"{where}: 'objects' must be a list")
    parsed = [__object_from_dict(o, f"{where}: object {i}") for i, o in enumerate(objects)]

    triple = doc.get("triple")
    if triple is not None:
        if not isinstance(triple, list) or len(triple) != 3:
            raise InstanceFormatError(f"{where}: 'triple' must list 3 indices, got {triple!r}")
        triple = tuple(__index(i, f"{where}: triple") for i in triple)

    graph = None
    if "graph" in doc:
        g = doc["graph"]
        if not isinstance(g, dict) or not isinstance(g.get("edges"), list):
            raise InstanceFormatError(f"{where}: 'graph' must hold 'n' and 'edges'")
        n = __index(g.get("n"), f"{where}: graph n")
        edges = []
        for e in g["edges"]:
            if not isinstance(e, list) or len(e) != 2:
                raise InstanceFormatError(f"{where}: graph edge {e!r} is not a pair")
            edges.append((__index(e[0], f"{where}: graph edge"), __index(e[1], f"{where}: graph edge")))
        try:
            graph = Graph(n, edges)
        except ValueError as e:
            raise InstanceFormatError(f"{where}: {e}")

    try:
        return Instance(objects=parsed, kind=doc.get("kind", "pi2"), triple=triple, graph=graph)
    except ContractViolation as e:
        raise InstanceFormatError(f"{where}: {e}")


def write_instance(inst: Instance, path: str, compress: bool = None) -> None:
    """
    Write an instance to a JSON file. Floats keep their shortest round-trip representation.

    :param inst: Instance
    :param path: file path to write to
    :param compress: whether to use gzip compression; by default when ``path`` ends with ``.gz``
    :return:
    """
    __dump(instance_to_dict(inst), path, compress)


def read_instance(path: str, compress: bool = None) -> Instance:
    """
    Read an instance from a JSON file.

    :param path: file path to read from
    :param compress: whether the file is compressed; by default when ``path`` ends with ``.gz``
    :return: Instance
    :raise InstanceFormatError: on malformed files
    """
    return instance_from_dict(__load(path, compress), str(path))


def result_to_dict(
    outcome: Union[CliqueResult, CneeoFailure, InvalidOrdering],
    method: str,
    elapsed_ms: float,
    validated: Optional[bool] = None,
) -> dict:
    """
    JSON document of a solver outcome. A CneeoFailure has a null clique and size and carries
    the remaining edges and the odd cycle as certificate. A rejected ordering also has a null
    clique and size, and records the offending position and its odd cycle.

    :param outcome: CliqueResult, CneeoFailure or the InvalidOrdering raised on extraction
    :param method: solver tag
    :param elapsed_ms: solver wall time
    :param validated: outcome of the ordering validation, when requested
    :return: dict
    """
    doc = {"method": method}
    if isinstance(outcome, CneeoFailure):
        doc["clique"] = None
        doc["size"] = None
        doc["certificate"] = {
            "remaining_edges": [list(e) for e in outcome.remaining],
            "edge": list(outcome.edge),
            "odd_cycle": list(outcome.certificate.cycle),
        }
    elif isinstance(outcome, InvalidOrdering):
        doc["clique"] = None
        doc["size"] = None
        doc["invalid_ordering"] = {
            "position": outcome.position,
            "odd_cycle": list(outcome.certificate.cycle),
        }
    else:
        doc["clique"] = list(outcome.vertices)
        doc["size"] = outcome.size
    doc["elapsed_ms"] = float(elapsed_ms)
    if validated is not None:
        doc["validated"] = bool(validated)
    return doc


def write_result(doc: dict, path: str, compress: bool = None) -> None:
    """
    Write a result document, as built by ``result_to_dict``.

    :param doc: result document
    :param path: file path to write to
    :param compress: whether to use gzip compression
    :return:
    """
    __dump(doc, path, compress)


def read_result(path: str, compress: bool = None) -> dict:
    """
    Read and check a result document.

    :param path: file path to read from
    :param compress: whether the file is compressed
    :return: dict
    :raise InstanceFormatError: on malformed files
    """
    doc = __load(path, compress)
    for key in ("method", "clique", "size", "elapsed_ms"):
        if key not in doc:
            raise InstanceFormatError(f"{path}: missing field {key!r}")
    clique = doc["clique"]
    if clique is None:
        if "certificate" not in doc and "invalid_ordering" not in doc:
            raise InstanceFormatError(f"{path}: a null clique needs a certificate")
    elif not isinstance(clique, list) or doc["size"] != len(clique):
        raise InstanceFormatError(f"{path}: clique and size disagree")
    return doc


def transversal_report_to_dict(report: TransversalReport, triple=(0, 1, 2)) -> dict:
    """
    JSON document of a transversal report. Middles are positions in the triple.

    :param report: TransversalReport
    :param triple: object indices of the triple
    :return: dict
    """
    mode = MiddleMode.from_profile(report.middle_profile)
    return {
        "triple": list(triple),
        "resolution": report.resolution,
        "profile": sorted(report.middle_profile),
        "mode": mode.tag,
        "mode_index": mode.index,
        "samples": [{"theta": s.theta, "offset": s.offset, "middle": s.middle} for s in report.samples],
    }


def write_transversal_report(report: TransversalReport, path: str, triple=(0, 1, 2), compress: bool = None) -> None:
    """
    :param report: TransversalReport
    :param path: file path to write to
    :param triple: object indices of the triple
    :param compress: whether to use gzip compression
    :return:
    """
    __dump(transversal_report_to_dict(report, triple), path, compress)


def partition_to_dict(x1: Iterable[int], x2: Iterable[int], verified: bool) -> dict:
    return {"X1": sorted(x1), "X2": sorted(x2), "verified": bool(verified)}


def write_partition(x1: Iterable[int], x2: Iterable[int], verified: bool, path: str, compress: bool = None) -> None:
    """
    Write a family bipartition.

    :param x1: object indices of the first part
    :param x2: object indices of the second part
    :param verified: whether both parts are cliques
    :param path: file path to write to
    :param compress: whether to use gzip compression
    :return:
    """
    __dump(partition_to_dict(x1, x2, verified), path, compress)


def write_bench_csv(rows: Iterable[dict], path: str) -> pd.DataFrame:
    """
    Writes benchmark rows to CSV format, one row per (size, seed, method), sorted by
    (n_objects, seed, method). Missing values are left blank.

    :param rows: dicts keyed by ``BENCH_COLUMNS``
    :param path: file path to write to
    :return: the written table
    """
    df = pd.DataFrame(list(rows), columns=BENCH_COLUMNS)
    df = df.sort_values(["n_objects", "seed", "method"], kind="mergesort").reset_index(drop=True)
    df.to_csv(path, index=False)
    return df


def read_bench_csv(path: str) -> pd.DataFrame:
    """
    Reads a benchmark table written by ``write_bench_csv``.

    :param path: file path to read from
    :return: DataFrame with ``BENCH_COLUMNS``
    :raise InstanceFormatError: when the header differs
    """
    df = pd.read_csv(path)
    if list(df.columns) != BENCH_COLUMNS:
        raise InstanceFormatError(f"{path}: expected columns {BENCH_COLUMNS}, got {list(df.columns)}")
    return df
