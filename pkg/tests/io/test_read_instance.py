import pytest

from dpsub.construction.dps import build_dps
from dpsub.generators.gint import gen_gint
from dpsub.generators.manhattan import gen_manhattan
from dpsub.generators.random import gen_random
from dpsub.generators.setcover import SetCoverInstance, gen_gset
from dpsub.instance import UnitPointInstance
from dpsub.io import read_instance, write_instance


# test class
class TestRead:
    def test_interval(self, tmp_path):
        G = gen_gint(2)
        path = write_instance.write(G, tmp_path / "gint.json")
        read = read_instance.read(path)
        # test values
        assert read == G
        assert read.labels == G.labels
        assert read.meta == {"generator": "gint", "k": 2}

    def test_unit_point(self):
        G = gen_random(12, 4, seed=3, flavor="unit_point")
        read = read_instance.loads(write_instance.dumps(G))
        # test types
        assert isinstance(read, UnitPointInstance)
        # test values
        assert read == G

    def test_graph(self):
        G = gen_gset(SetCoverInstance(2, ({1}, {2})))
        read = read_instance.loads(write_instance.dumps(G))
        # test values
        assert read == G
        assert read.labels == G.labels

    def test_digraph(self):
        D = gen_manhattan(2)
        # test values
        assert read_instance.loads(write_instance.dumps(D)) == D

    def test_subgraph(self, tmp_path):
        result = build_dps(gen_random(16, 5, seed=1))
        path = write_instance.write(result.subgraph, tmp_path / "dps.json", stats={"seed": 1})
        # test values
        assert read_instance.read(path) == result.subgraph
        assert read_instance.read_stats(path)["seed"] == 1
        assert read_instance.read_stats(path)["edges"] == len(result.subgraph.edge_set)

    def test_stats_of_instance(self, tmp_path):
        path = write_instance.write(gen_gint(2), tmp_path / "gint.json")
        # test values
        assert read_instance.read_stats(path) == {}

class TestInvalid:
    def test_version(self):
        doc = write_instance.to_document(gen_gint(2))
        doc["version"] = 0
        with pytest.raises(ValueError):
            read_instance.from_document(doc)

    def test_kind(self):
        doc = write_instance.to_document(gen_gint(2))
        doc["kind"] = "hypergraph"
        with pytest.raises(ValueError):
            read_instance.from_document(doc)

    def test_digraph_cells(self):
        doc = write_instance.to_document(gen_manhattan(2))
        doc["vertices"][0] = [1, 1]
        with pytest.raises(ValueError):
            read_instance.from_document(doc)

    def test_rational(self):
        doc = write_instance.to_document(gen_gint(2))
        doc["intervals"][0][0] = [1, 0]
        with pytest.raises(ValueError):
            read_instance.from_document(doc)
