from .verifier import enumerate_queries, replay_witness, verify_sparsifier, verify_subgraph
