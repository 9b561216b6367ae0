from power_graph_coloring.engine import PowerGraphEngine

engine = PowerGraphEngine()
corpus = engine.verify_corpus()
engine.logger.info(f"{len(corpus.reports) - len(corpus.failures)}/{len(corpus.reports)} magmas passed")
