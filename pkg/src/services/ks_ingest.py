"""Kreuzer-Skarke database ingestion (PALP vertex matrices) and the census scan"""
import json
import logging
import os
from multiprocessing import Pool

from src.errors import DegeneratePolytopeError, InvalidInputError, PalpParseError
from src.models.lattice import LatticePoint
from src.models.scan import PolytopeRecord, ScanReport
from src.services.analyzer import analyze_record
from src.services.hull import convex_hull

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 500
CHUNKSIZE = 16


def _tokens(line):
    return line.replace('\u2212', '-').split()


def _ints(tokens, line_no):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise PalpParseError(f"expected integers, got {' '.join(tokens)!r}", line_no) from None


def _full_dimensional(points):
    try:
        convex_hull(points)
    except DegeneratePolytopeError:
        return False
    return True


def parse_palp(stream):
    """Yield one PolytopeRecord per "rows cols [comment]" header and matrix block"""
    lines = ((no, _tokens(line)) for no, line in enumerate(stream, start=1))
    lines = ((no, tokens) for no, tokens in lines if tokens)
    index = 0
    for header_no, header in lines:
        if len(header) < 2:
            raise PalpParseError("header needs two dimension tokens", header_no)
        try:
            rows, cols = int(header[0]), int(header[1])
        except ValueError:
            raise PalpParseError(f"unparseable dimensions {header[0]!r} {header[1]!r}", header_no) from None
        if 3 not in (rows, cols):
            raise PalpParseError(f"not a 3-polytope ({rows}x{cols} matrix)", header_no)
        if rows < 1 or cols < 1:
            raise PalpParseError(f"empty {rows}x{cols} matrix", header_no)

        matrix = []
        last_no = header_no
        for _ in range(rows):
            try:
                last_no, tokens = next(lines)
            except StopIteration:
                raise PalpParseError(
                    f"truncated block: expected {rows} rows, got {len(matrix)}", last_no
                ) from None
            if len(tokens) != cols:
                raise PalpParseError(f"expected {cols} entries, got {len(tokens)}", last_no)
            matrix.append(_ints(tokens, last_no))

        if rows == 3 and cols == 3:
            as_columns = [LatticePoint(tuple(c)) for c in zip(*matrix)]
            as_rows = [LatticePoint(tuple(r)) for r in matrix]
            if _full_dimensional(as_columns):
                vertices = as_columns
            elif _full_dimensional(as_rows):
                vertices = as_rows
            else:
                raise PalpParseError("3x3 block is not a full-dimensional vertex set", header_no)
        elif rows == 3:
            vertices = [LatticePoint(tuple(c)) for c in zip(*matrix)]
        else:
            vertices = [LatticePoint(tuple(r)) for r in matrix]

        yield PolytopeRecord(index=index, vertices=tuple(vertices), source_header=' '.join(header))
        index += 1


def parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PalpParseError(f"invalid JSON: {e.msg}", e.lineno) from None
    if not isinstance(data, list) or not all(isinstance(v, list) for v in data):
        raise InvalidInputError("expected a JSON array of 3-integer arrays")
    vertices = tuple(LatticePoint(tuple(v)) for v in data)
    return [PolytopeRecord(index=0, vertices=vertices, source_header='json')]


def format_palp(records):
    blocks = []
    for record in records:
        columns = list(zip(*(v.coords for v in record.vertices)))
        comment = record.source_header.split()[2:]
        header = " ".join([f"3 {len(record.vertices)}"] + comment)
        blocks.append("\n".join([header] + [" ".join(str(x) for x in row) for row in columns]))
    return "\n".join(blocks) + ("\n" if blocks else "")


def infer_format(path):
    return 'json' if str(path).lower().endswith('.json') else 'palp'


def read_records(path, fmt=None):
    fmt = fmt or infer_format(path)
    with open(path, encoding='utf-8') as fh:
        if fmt == 'json':
            return parse_json(fh.read())
        return list(parse_palp(fh))


def scan(records, parallelism=1):
    """Analyze every record; the report is ordered by index whatever the parallelism"""
    if parallelism < 1:
        raise InvalidInputError(f"parallelism must be positive, got {parallelism}")

    results = []

    def collect(analyzed):
        for result in analyzed:
            results.append(result)
            if len(results) % PROGRESS_EVERY == 0:
                logger.info("scanned %d polytopes", len(results))

    if parallelism == 1:
        collect(analyze_record(r) for r in records)
    else:
        with Pool(processes=parallelism) as pool:
            collect(pool.imap(analyze_record, records, chunksize=CHUNKSIZE))

    report = ScanReport.from_records(results)
    logger.info("scan finished: %s", report.summary_line())
    return report


def write_report(report, sink):
    """One JSON record per line in index order, then one summary line"""
    for record in report.records:
        sink.write(json.dumps(record.to_dict(), separators=(',', ':')) + "\n")
    sink.write(json.dumps({'summary': report.summary()}, separators=(',', ':')) + "\n")


def default_parallelism():
    return os.cpu_count() or 1
