hypergraph 4 6 3
0 1 2 3
0 1 4 5
2 3 4 5
