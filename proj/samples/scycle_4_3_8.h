hypergraph 4 8 8
0 1 2 3
0 1 2 7
0 1 6 7
0 5 6 7
1 2 3 4
2 3 4 5
3 4 5 6
4 5 6 7
