#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Reader and writer for ``.t3i`` instance files.

A file is a header followed by sections, one keyword line each::

    NAME worked_example
    DIRECTION undirected
    NODES
    v1 v2 v3 v4
    EDGES
    e1 v1 v2
    COSTS c edges ℝ≥0
    e1 2
    COSTS tt edges time
    e1 2 @5 3
    PARAMS
    b = 3
    s = v1
    GROUPS
    1: v1 v2 ; start=v1 ; terminals=v1 v2

Further sections are CLUSTERS, COORDS (``v x y``), NODESET, PRECEDENCES
(``u v``: u is visited before v) and KINETIC (``v x y vx vy``). Numbers
are integers, decimals or ``p/q`` and are read exactly; ``inf`` is allowed.
Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from core.costs import DOMAINS, EDGE_PAIRS, EDGES, NODES, CostFunction, TemporalTable, format_value, parse_value, range_contains
from core.errors import RangeError, SchemaError, T3coError
from core.graph import DIRECTIONS, UNDIRECTED, Edge, Graph
from instances.model import Instance, KineticTarget, NodeGroup
from utils.log import get_logger

logger = get_logger(__name__)

SECTIONS = ('NODES', 'EDGES', 'COSTS', 'PARAMS', 'GROUPS', 'CLUSTERS', 'COORDS',
            'NODESET', 'PRECEDENCES', 'KINETIC')
TEMPORAL_KINDS = ('time', 'position')
NODE_PARAMS = {'s': 'start_node', 'start': 'start_node', 't': 'end_node', 'end': 'end_node'}


class _Table:
    def __init__(self, name: str, domain: str, kind: Optional[str], range_tag: Optional[str], line: int):
        self.name = name
        self.domain = domain
        self.kind = kind
        self.range_tag = range_tag
        self.line = line
        self.values: Dict = {}
        self.steps: Dict = {}


def _number(token: str, line: int):
    try:
        return parse_value(token)
    except SchemaError:
        raise SchemaError(f"Not a number: {token}", line)


def _group(text: str, line: int) -> NodeGroup:
    if ':' not in text:
        raise SchemaError("Group rows read 'index: nodes [; start=v ; end=v ; terminals=v w]'", line)
    index, rest = text.split(':', 1)
    parts = [part.strip() for part in rest.split(';')]
    nodes = tuple(parts[0].split())
    if not nodes:
        raise SchemaError(f"Group {index.strip()} is empty", line)
    options = {}
    for part in parts[1:]:
        if '=' not in part:
            raise SchemaError(f"Expected key=value in group row, got {part!r}", line)
        key, value = (token.strip() for token in part.split('=', 1))
        if key not in ('start', 'end', 'terminals'):
            raise SchemaError(f"Unknown group option {key}", line)
        options[key] = value
    return NodeGroup(index.strip(), nodes, options.get('start'), options.get('end'),
                     tuple(options.get('terminals', '').split()))


def _table_header(tokens: List[str], line: int) -> _Table:
    if len(tokens) < 3:
        raise SchemaError("COSTS header reads 'COSTS name domain [time|position] [range]'", line)
    name, domain = tokens[1], tokens[2]
    if domain not in DOMAINS:
        raise SchemaError(f"Unknown cost domain {domain}", line)
    kind = range_tag = None
    for token in tokens[3:]:
        if token in TEMPORAL_KINDS:
            kind = token
        elif range_tag is None:
            range_tag = token
        else:
            raise SchemaError(f"Unexpected token {token} in COSTS header", line)
    return _Table(name, domain, kind, range_tag, line)


def _table_row(table: _Table, tokens: List[str], line: int):
    if table.domain == EDGE_PAIRS:
        if len(tokens) != 3:
            raise SchemaError("Edge-pair rows read 'e f value'", line)
        key, rest = (tokens[0], tokens[1]), tokens[2:]
    else:
        key, rest = tokens[0], tokens[1:]
    if not rest:
        raise SchemaError(f"Missing value for {key}", line)
    if key in table.values:
        raise SchemaError(f"Duplicate value for {key} in {table.name}", line)
    value = _number(rest[0], line)
    if table.range_tag is not None and not range_contains(table.range_tag, value):
        raise RangeError(f"Value {rest[0]} of {table.name}({key}) outside {table.range_tag}", line)
    table.values[key] = value
    if table.kind is None:
        if len(rest) > 1:
            raise SchemaError(f"Breakpoints given for non-temporal table {table.name}", line)
        return
    steps = [(Fraction(0), value)]
    pending = rest[1:]
    if len(pending) % 2:
        raise SchemaError("Temporal rows read 'id value @point value ...'", line)
    for marker, amount in zip(pending[::2], pending[1::2]):
        if not marker.startswith('@'):
            raise SchemaError(f"Expected @breakpoint, got {marker}", line)
        point = _number(marker[1:], line)
        if point <= steps[-1][0]:
            raise SchemaError("Breakpoints must increase", line)
        steps.append((point, _number(amount, line)))
    table.steps[key] = tuple(steps)


def _check_keys(graph: Graph, table: _Table):
    for key in table.values:
        keys = key if table.domain == EDGE_PAIRS else (key,)
        for element in keys:
            known = graph.has_node(element) if table.domain == NODES else graph.has_edge(element)
            if not known:
                raise SchemaError(f"Table {table.name} names unknown element {element}", table.line)


def load_native(text: str, variant=None) -> Instance:
    """
    Read an instance from ``.t3i`` text.

    Args:
        text: file contents
        variant: optional resolved variant; when given, every symbol it needs
            must be bound

    Returns:
        Instance: the loaded instance

    Raises:
        SchemaError: Malformed file, with the offending line
        RangeError: Value outside the declared range of its table
        InstanceInvariantError: Contradictory data such as r(v) > d(v)
        BindingError: If ``variant`` needs data the file does not provide
    """
    header: Dict[str, str] = {}
    nodes: List[str] = []
    edges: List[Tuple[str, str, str, int]] = []
    tables: List[_Table] = []
    params: Dict = {}
    designated: Dict[str, str] = {}
    groups: List[NodeGroup] = []
    clusters: List[NodeGroup] = []
    coords: Dict = {}
    nodeset: List[str] = []
    precedences: List[Tuple[str, ...]] = []
    kinetic: List[KineticTarget] = []
    section = None
    current_table = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        tokens = line.split()
        keyword = tokens[0]
        if keyword in SECTIONS:
            section = keyword
            if section == 'COSTS':
                current_table = _table_header(tokens, number)
                if any(t.name == current_table.name for t in tables):
                    raise SchemaError(f"Table {current_table.name} defined twice", number)
                tables.append(current_table)
            elif len(tokens) > 1:
                raise SchemaError(f"Unexpected text after {keyword}", number)
            continue
        if section is None:
            if keyword not in ('NAME', 'DIRECTION'):
                raise SchemaError(f"Expected NAME, DIRECTION or a section keyword, got {keyword}", number)
            header[keyword] = ' '.join(tokens[1:])
            continue
        if section == 'NODES':
            nodes.extend(tokens)
        elif section == 'EDGES':
            if len(tokens) != 3:
                raise SchemaError("Edge rows read 'id tail head'", number)
            edges.append((tokens[0], tokens[1], tokens[2], number))
        elif section == 'COSTS':
            _table_row(current_table, tokens, number)
        elif section == 'PARAMS':
            if '=' not in line:
                raise SchemaError("Parameter rows read 'key = value'", number)
            key, value = (part.strip() for part in line.split('=', 1))
            if key in NODE_PARAMS:
                designated[NODE_PARAMS[key]] = value
            else:
                params[key] = _number(value, number)
        elif section in ('GROUPS', 'CLUSTERS'):
            (groups if section == 'GROUPS' else clusters).append(_group(line, number))
        elif section == 'COORDS':
            if len(tokens) != 3:
                raise SchemaError("Coordinate rows read 'node x y'", number)
            coords[tokens[0]] = (_number(tokens[1], number), _number(tokens[2], number))
        elif section == 'NODESET':
            nodeset.extend(tokens)
        elif section == 'PRECEDENCES':
            if len(tokens) < 2:
                raise SchemaError("Precedence rows list at least two nodes", number)
            precedences.append(tuple(tokens))
        elif section == 'KINETIC':
            if len(tokens) != 5:
                raise SchemaError("Kinetic rows read 'node x y vx vy'", number)
            values = [_number(token, number) for token in tokens[1:]]
            kinetic.append(KineticTarget(tokens[0], (values[0], values[1]), (values[2], values[3])))

    direction = header.get('DIRECTION', UNDIRECTED)
    if direction not in DIRECTIONS:
        raise SchemaError(f"Unknown direction {direction}")
    if not nodes:
        raise SchemaError("Instance declares no nodes")
    try:
        graph = Graph(tuple(nodes), tuple(Edge(i, u, v) for i, u, v, _ in edges), direction)
    except T3coError as e:
        raise SchemaError(str(e))
    bound_tables = {}
    for table in tables:
        _check_keys(graph, table)
        temporal = TemporalTable(table.kind, dict(table.steps)) if table.kind else None
        bound_tables[table.name] = CostFunction(table.name, table.domain, dict(table.values),
                                                table.range_tag, temporal)
    for node in list(coords) + nodeset + [n for chain in precedences for n in chain]:
        if not graph.has_node(node):
            raise SchemaError(f"Unknown node {node}")

    instance = Instance(
        graph=graph,
        tables=bound_tables,
        params=params,
        start_node=designated.get('start_node'),
        end_node=designated.get('end_node'),
        groups=tuple(groups),
        clusters=tuple(clusters),
        coords=coords,
        nodeset=tuple(nodeset),
        precedences=tuple(precedences),
        kinetic=tuple(kinetic),
        name=header.get('NAME', ''),
    )
    logger.debug(f"Loaded instance {instance.name or '<unnamed>'}: "
                 f"{len(graph.nodes)} nodes, {len(graph.edges)} edges, {len(bound_tables)} tables")
    if variant is not None:
        from instances.binding import bind

        bind(instance, variant)
    return instance


def _group_row(group: NodeGroup) -> str:
    text = f"{group.index}: {' '.join(group.nodes)}"
    if group.start:
        text += f" ; start={group.start}"
    if group.end:
        text += f" ; end={group.end}"
    if group.terminals:
        text += f" ; terminals={' '.join(group.terminals)}"
    return text


def _table_rows(graph: Graph, table: CostFunction) -> List[str]:
    if table.domain == EDGES:
        order = [edge.id for edge in graph.edges]
    elif table.domain == NODES:
        order = list(graph.nodes)
    else:
        order = sorted(table.values)
    rows = []
    for key in order:
        if key not in table.values:
            continue
        label = ' '.join(key) if table.domain == EDGE_PAIRS else key
        row = f"{label} {format_value(table.values[key])}"
        if table.temporal is not None:
            for point, value in table.temporal.steps.get(key, ())[1:]:
                row += f" @{format_value(point)} {format_value(value)}"
        rows.append(row)
    return rows


def save_native(instance: Instance) -> str:
    """Write an instance in canonical ``.t3i`` form."""
    graph = instance.graph
    lines = []
    if instance.name:
        lines.append(f"NAME {instance.name}")
    lines.append(f"DIRECTION {graph.direction}")
    lines += ['NODES', ' '.join(graph.nodes)]
    if graph.edges:
        lines.append('EDGES')
        lines += [f"{edge.id} {edge.tail} {edge.head}" for edge in graph.edges]
    for name in sorted(instance.tables):
        table = instance.tables[name]
        header = f"COSTS {name} {table.domain}"
        if table.temporal is not None:
            header += f" {table.temporal.kind}"
        if table.range_tag:
            header += f" {table.range_tag}"
        lines.append(header)
        lines += _table_rows(graph, table)
    if instance.params or instance.start_node or instance.end_node:
        lines.append('PARAMS')
        if instance.start_node:
            lines.append(f"s = {instance.start_node}")
        if instance.end_node:
            lines.append(f"t = {instance.end_node}")
        lines += [f"{key} = {format_value(value)}" for key, value in sorted(instance.params.items())]
    for title, groups in (('GROUPS', instance.groups), ('CLUSTERS', instance.clusters)):
        if groups:
            lines.append(title)
            lines += [_group_row(group) for group in groups]
    if instance.coords:
        lines.append('COORDS')
        lines += [f"{node} {format_value(x)} {format_value(y)}"
                  for node, (x, y) in ((n, instance.coords[n]) for n in graph.nodes if n in instance.coords)]
    if instance.nodeset:
        lines += ['NODESET', ' '.join(instance.nodeset)]
    if instance.precedences:
        lines.append('PRECEDENCES')
        lines += [' '.join(chain) for chain in instance.precedences]
    if instance.kinetic:
        lines.append('KINETIC')
        lines += [f"{target.node} {' '.join(format_value(v) for v in target.origin + target.velocity)}"
                  for target in instance.kinetic]
    return '\n'.join(lines) + '\n'
