"""Degree-truncated rewriting for path algebras and presented modules.

The relation ideal of a quiver algebra is completed into a confluent set of
rewrite rules up to a degree bound (noncommutative Buchberger, truncated);
normal words then form an exact basis of the truncated algebra, and arrow
actions are computed by normal forms instead of dense row reduction.  A
module variant handles left modules presented by generators and relations:
module words extend generators on the right, so module rules rewrite
prefixes while algebra rules rewrite arbitrary subwords.

Words are tuples of arrow names in travel order (first-traversed arrow
first).  All coefficients are Fraction.
"""

from __future__ import annotations

from fractions import Fraction


def _word_key(aidx, w):
    return (len(w), tuple(aidx[x] for x in w))


class RewriteSystem:
    """Confluent (up to `maxdeg`) rewrite rules for the relation ideal."""

    def __init__(self, quiver, maxdeg):
        self.quiver = quiver
        self.maxdeg = maxdeg
        self.aidx = {n: i for i, n in enumerate(sorted(quiver.arrows))}
        self.rules = {}
        self._complete()
        self.maxlead = max((len(L) for L in self.rules), default=0)
        self.leads = set(self.rules)

    def _key(self, w):
        return _word_key(self.aidx, w)

    def reduce(self, elem):
        """Normal form of {word: coeff} under the current rules."""
        rules = self.rules
        todo = dict(elem)
        done = {}
        while todo:
            w = max(todo, key=self._key)
            c = todo.pop(w)
            if not c:
                continue
            hit = None
            for i in range(len(w) - 1):
                for k in range(2, len(w) - i + 1):
                    L = w[i:i + k]
                    if L in rules:
                        hit = (i, L)
                        break
                if hit:
                    break
            if hit is None:
                done[w] = done.get(w, Fraction(0)) + c
                continue
            i, L = hit
            for t, tc in rules[L].items():
                nw = w[:i] + t + w[i + len(L):]
                todo[nw] = todo.get(nw, Fraction(0)) + c * tc
        return {w: c for w, c in done.items() if c}

    def normal_form(self, word):
        return self.reduce({tuple(word): Fraction(1)})

    def _add_rule(self, elem):
        lead = max(elem, key=self._key)
        lc = elem[lead]
        self.rules[lead] = {w: -c / lc for w, c in elem.items() if w != lead}
        return lead

    def _complete(self):
        q = self.quiver
        for rel in q.relations:
            elem = {}
            for c, (f, g) in rel:
                w = (f, g)
                elem[w] = elem.get(w, Fraction(0)) + c
            elem = {w: c for w, c in elem.items() if c}
            if elem:
                self._add_rule(self.reduce(elem))
        pairs = [(u, v) for u in list(self.rules) for v in list(self.rules)]
        while pairs:
            u, v = pairs.pop()
            if u not in self.rules or v not in self.rules:
                continue
            for k in range(1, min(len(u), len(v))):
                if u[-k:] != v[:k]:
                    continue
                w = u + v[k:]
                if len(w) > self.maxdeg or not self._composable(w):
                    continue
                s = {}
                for t, c in self.rules[u].items():
                    nw = t + v[k:]
                    s[nw] = s.get(nw, Fraction(0)) + c
                for t, c in self.rules[v].items():
                    nw = u[:-k] + t
                    s[nw] = s.get(nw, Fraction(0)) - c
                s = self.reduce(s)
                if s:
                    lead = self._add_rule(s)
                    pairs.extend((lead, r) for r in list(self.rules))
                    pairs.extend((r, lead) for r in list(self.rules))
        self.leads = set(self.rules)
        self.maxlead = max((len(L) for L in self.rules), default=0)

    def _composable(self, w):
        arrows = self.quiver.arrows
        for x, y in zip(w, w[1:]):
            if arrows[x].dst != arrows[y].src:
                return False
        return True

    def is_normal_extension(self, word):
        """True when `word` (a normal word plus one arrow) stays normal."""
        n = len(word)
        for k in range(2, min(self.maxlead, n) + 1):
            if word[n - k:] in self.leads:
                return False
        return True

    def normal_words(self, v0, maxdeg):
        """Normal words from vertex v0 by degree: [(word, end vertex)]."""
        arrows = sorted(self.quiver.arrows.values(), key=lambda a: a.name)
        out = {0: [((), v0)]}
        cur = out[0]
        for d in range(1, maxdeg + 1):
            nxt = []
            for w, t in cur:
                for a in arrows:
                    if a.src != t:
                        continue
                    nw = w + (a.name,)
                    if self.is_normal_extension(nw):
                        nxt.append((nw, a.dst))
            out[d] = nxt
            cur = nxt
        return out


class ModuleRules:
    """Prefix-rewriting presentation of a left module over the algebra.

    gens: [(vertex, internal degree)]; rels: list of {(gen index, word):
    coeff} with each word a path starting at the generator's vertex.  The
    relations are completed against the algebra rules up to `maxdeg` so that
    normal module words count the graded dimensions exactly.
    """

    def __init__(self, rs: RewriteSystem, gens, rels, maxdeg=None):
        self.rs = rs
        self.gens = list(gens)
        self.maxdeg = rs.maxdeg if maxdeg is None else maxdeg
        self.mrules = {}
        self._complete([self._clean(r) for r in rels])

    # -- element plumbing ----------------------------------------------------

    def _mkey(self, term):
        i, w = term
        return (self.gens[i][1] + len(w), i, self.rs._key(w))

    def _clean(self, elem):
        return {t: Fraction(c) for t, c in elem.items() if c}

    def reduce(self, elem):
        """Normal form of {(gen, word): coeff} under both rule sets."""
        todo = self._clean(elem)
        done = {}
        while todo:
            term = max(todo, key=self._mkey)
            c = todo.pop(term)
            if not c:
                continue
            i, w = term
            hit = None
            # algebra rules anywhere inside the word
            for p in range(len(w) - 1):
                for k in range(2, len(w) - p + 1):
                    L = w[p:p + k]
                    if L in self.rs.rules:
                        hit = ("alg", p, L)
                        break
                if hit:
                    break
            if hit is None:
                # module rules on a prefix
                for k in range(len(w) + 1):
                    if (i, w[:k]) in self.mrules:
                        hit = ("mod", k, (i, w[:k]))
                        break
            if hit is None:
                done[term] = done.get(term, Fraction(0)) + c
                continue
            if hit[0] == "alg":
                _, p, L = hit
                for t, tc in self.rs.rules[L].items():
                    nt = (i, w[:p] + t + w[p + len(L):])
                    todo[nt] = todo.get(nt, Fraction(0)) + c * tc
            else:
                _, k, key = hit
                ext = w[k:]
                for (i2, w2), tc in self.mrules[key].items():
                    nt = (i2, w2 + ext)
                    todo[nt] = todo.get(nt, Fraction(0)) + c * tc
        return {t: c for t, c in done.items() if c}

    def _degree(self, term):
        i, w = term
        return self.gens[i][1] + len(w)

    # -- completion ----------------------------------------------------------

    def _add_rule(self, elem):
        lead = max(elem, key=self._mkey)
        lc = elem[lead]
        self.mrules[lead] = {t: -c / lc for t, c in elem.items() if t != lead}
        return lead

    def _element_of(self, lead):
        elem = {lead: Fraction(1)}
        for t, c in self.mrules[lead].items():
            elem[t] = elem.get(t, Fraction(0)) - c
        return elem

    def _complete(self, rels):
        queue = [self.reduce(r) for r in rels]
        pending = []
        while queue or pending:
            if queue:
                elem = queue.pop()
                if not elem:
                    continue
                lead = self._add_rule(elem)
                # existing rules whose lead extends the new one get redone
                li, lw = lead
                stale = [k for k in self.mrules
                         if k != lead and k[0] == li
                         and k[1][:len(lw)] == lw]
                for k in stale:
                    e = self._element_of(k)
                    del self.mrules[k]
                    queue.append(self.reduce(e))
                pending.extend((lead, v) for v in self.rs.rules)
                continue
            mlead, alead = pending.pop()
            if mlead not in self.mrules:
                continue
            i, u = mlead
            for k in range(1, len(alead)):
                if len(u) < k or u[-k:] != alead[:k]:
                    continue
                ext = alead[k:]
                deg = self.gens[i][1] + len(u) + len(ext)
                if deg > self.maxdeg:
                    continue
                s = {}
                for (i2, w2), c in self.mrules[mlead].items():
                    t = (i2, w2 + ext)
                    s[t] = s.get(t, Fraction(0)) + c
                for t2, c in self.rs.rules[alead].items():
                    t = (i, u[:-k] + t2)
                    s[t] = s.get(t, Fraction(0)) - c
                s = self.reduce(s)
                if s:
                    queue.append(s)

    # -- normal words --------------------------------------------------------

    def normal_words(self, maxdeg=None):
        """{(vertex, degree): [(gen, word), ...]} in a deterministic order."""
        maxdeg = self.maxdeg if maxdeg is None else maxdeg
        arrows = sorted(self.rs.quiver.arrows.values(), key=lambda a: a.name)
        qarr = self.rs.quiver.arrows
        out = {}
        level = []
        for i, (v, s) in enumerate(self.gens):
            if (i, ()) not in self.mrules and s <= maxdeg:
                level.append(((i, ()), v))
                out.setdefault((v, s), []).append((i, ()))
        degs = sorted(set(s for _, s in self.gens))
        # grow degree by degree; generators may start at different shifts
        frontier = {}
        for (i, w), v in level:
            frontier.setdefault(self.gens[i][1], []).append(((i, w), v))
        d = min(frontier) if frontier else 0
        dmax = maxdeg
        while frontier:
            d = min(frontier)
            if d >= dmax:
                break
            cur = frontier.pop(d)
            for (i, w), v in cur:
                for a in arrows:
                    if a.src != v:
                        continue
                    nw = w + (a.name,)
                    if not self.rs.is_normal_extension(nw):
                        continue
                    if any((i, nw[:k]) in self.mrules
                           for k in range(len(nw) + 1)):
                        continue
                    out.setdefault((a.dst, d + 1), []).append((i, nw))
                    frontier.setdefault(d + 1, []).append(((i, nw), a.dst))
        return out

    def dims(self, maxdeg=None):
        return {k: len(v) for k, v in self.normal_words(maxdeg).items()}
