from power_graph_coloring.__about__ import __version__
