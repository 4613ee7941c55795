class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by size."""

    def __init__(self, n=0):
        self.parent = list(range(n))
        self.size = [1] * n

    def add(self):
        self.parent.append(len(self.parent))
        self.size.append(1)
        return len(self.parent) - 1

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def classes(self):
        """Blocks as sorted lists, ordered by their smallest element."""
        blocks = {}
        for x in range(len(self.parent)):
            blocks.setdefault(self.find(x), []).append(x)
        return sorted(blocks.values(), key=lambda b: b[0])

    def labels(self):
        """Dense class labels in order of first appearance."""
        seen = {}
        out = []
        for x in range(len(self.parent)):
            r = self.find(x)
            if r not in seen:
                seen[r] = len(seen)
            out.append(seen[r])
        return out
