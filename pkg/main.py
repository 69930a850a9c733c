# @author Augustin Mortier
# @desc dpsub - Main

import dpsub


def main(k, seed):
    # random interval instance with k terminals
    G = dpsub.generators.random.gen_random(4 * k, k, seed=seed)

    # +1 approximating subgraph
    das = dpsub.construction.das.build_das(G)
    print("das", dpsub.subgraph.branching_vertices(das.subgraph)[0], dpsub.subgraph.verify_approx(G, das.subgraph, 1).ok)

    # distance-preserving subgraph
    dps = dpsub.construction.dps.build_dps(G)
    print("dps", dpsub.subgraph.branching_vertices(dps.subgraph)[0], dpsub.subgraph.verify_preserving(G, dps.subgraph).ok)
    #print(dps.stats.levels)

    # lower-bound instances
    # G_hard = dpsub.generators.hard.gen_hard(4)
    # print(dpsub.oracle.search.min_branching_das(G_hard, slack=1))
    # D = dpsub.generators.manhattan.gen_manhattan(4)
    # print(dpsub.generators.manhattan.row_branching_bound(dpsub.subgraph.Subgraph.full(D), 4))

    # export
    #print(dpsub.io.export.to_dot(dps.subgraph))

if __name__ == "__main__":
    main(k=8, seed=7)
