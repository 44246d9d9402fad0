"""
lemma-verifier 的异常
"""


class SearchGuardError(RuntimeError):
    """搜索范围或节点数超过保护上限"""
