from yacs.config import CfgNode

_C = CfgNode()

_C.garside = CfgNode()
# upper bound on the length of a candidate Garside word, 0 means 2|X|^2
_C.garside.max_word_length = 0

_C.oracle = CfgNode()
# maximum number of words visited by one rewriting closure
_C.oracle.budget = 1000000
# words remembered by the closure and canonical-word caches
_C.oracle.cache_size = 200000

_C.probe = CfgNode()
_C.probe.k_max = 6

_C.logging = CfgNode()
_C.logging.level = 'WARNING'


def get_cfg_defaults() -> CfgNode:
    return _C.clone()


def load_cfg(cfg_file: str = None, freeze: bool = True, overrides: list = ()):
    cfg = get_cfg_defaults()
    if cfg_file is not None:
        cfg.merge_from_file(cfg_file)
    if overrides:
        cfg.merge_from_list(list(overrides))
    if freeze:
        cfg.freeze()
    return cfg
