"""Random well-typed signatures, contexts, and objects.

Shared by the property-test suite and the backend benchmark.  Generation
is type-directed: a target family is picked first and an inhabitant is
built for it, spine heads chosen by matching erased shapes and verified
with the family equality judgment.  Equal pairs are produced by rewriting
a term with meaning-preserving steps (identity and constant beta
expansions, eta expansion, binder renaming).
"""

import random

from lfkit import equality as eq
from lfkit import erasure as er
from lfkit import syntax as syn
from lfkit import typecheck as tc


class GenError(Exception):
    """Generation dead end; callers retry with different choices."""


_POOL = ("x", "y", "z", "u", "v", "w")


class TermGen:
    def __init__(self, seed=0, rng=None):
        self.rng = rng if rng is not None else random.Random(seed)

    # -- names --------------------------------------------------------

    def _binder(self, g):
        name = self.rng.choice(_POOL)
        return name if not g.declares(name) else syn.fresh(name)

    # -- signatures ---------------------------------------------------

    def signature(self, max_consts=10):
        """A checked signature with 2-3 base families, optionally a
        dependent family, ground constants, and some (possibly
        higher-order) functions."""
        rng = self.rng
        decls = []
        bases = ["a%d" % i for i in range(rng.randint(2, 3))]
        for b in bases:
            decls.append((b, syn.TYPE))
        fam = lambda name: syn.FamConst(name)

        dep = None
        if rng.random() < 0.6:
            dep = "p"
            decls.append((dep, syn.PiK("x", fam(rng.choice(bases)), syn.TYPE)))

        # Ground constants: at least one per base so spines can bottom out.
        n_ground = 0
        for b in bases:
            decls.append(("k%d" % n_ground, fam(b)))
            n_ground += 1
        if rng.random() < 0.5:
            decls.append(("k%d" % n_ground, fam(rng.choice(bases))))
            n_ground += 1

        n_fun = 0
        while len(decls) < max_consts and n_fun < 4:
            shape = rng.random()
            cod = fam(rng.choice(bases))
            if shape < 0.45:
                ty = syn.Pi(self._pick_pool(), fam(rng.choice(bases)), cod)
            elif shape < 0.75:
                v1, v2 = self._pick_pool(), self._pick_pool()
                ty = syn.Pi(
                    v1,
                    fam(rng.choice(bases)),
                    syn.Pi(v2 if v2 != v1 else v2 + "0", fam(rng.choice(bases)), cod),
                )
            elif shape < 0.9:
                ty = syn.Pi(
                    self._pick_pool(),
                    syn.Pi(self._pick_pool(), fam(rng.choice(bases)), fam(rng.choice(bases))),
                    cod,
                )
            elif dep is not None:
                base = None
                for name, classifier in decls:
                    if name == dep:
                        base = classifier.dom
                v = self._pick_pool()
                ty = syn.Pi(v, base, syn.FamApp(syn.FamConst(dep), syn.Var(v)))
            else:
                ty = syn.Pi(self._pick_pool(), fam(rng.choice(bases)), cod)
            decls.append(("f%d" % n_fun, ty))
            n_fun += 1
        return tc.check_signature(syn.Signature(tuple(decls)))

    def _pick_pool(self):
        return self.rng.choice(_POOL)

    # -- contexts and target families -----------------------------------

    def context(self, csig, max_vars=3):
        g = syn.Context()
        for _ in range(self.rng.randint(0, max_vars)):
            try:
                fam = self.type_target(csig, g, depth=1)
            except GenError:
                continue
            g = g.extended(self._binder(g), fam)
        tc.check_context(csig, g)
        return g

    def _base_families(self, csig):
        out = []
        for name, classifier in csig:
            if isinstance(classifier, syn.TypeKind):
                out.append(syn.FamConst(name))
        return out

    def _dependent_families(self, csig):
        out = []
        for name, classifier in csig:
            if isinstance(classifier, syn.PiK):
                out.append((syn.FamConst(name), classifier))
        return out

    def type_target(self, csig, g, depth):
        """A random family of kind ``type`` over the signature and context."""
        rng = self.rng
        bases = self._base_families(csig)
        roll = rng.random()
        if depth > 0 and roll < 0.25:
            dom = self.type_target(csig, g, depth - 1)
            v = self._binder(g)
            cod = self.type_target(csig, g.extended(v, dom), depth - 1)
            return syn.Pi(v, dom, cod)
        if depth > 0 and roll < 0.45:
            for fam, kind in self._shuffled(self._dependent_families(csig)):
                try:
                    arg = self.object_of(csig, g, kind.dom, depth - 1)
                except GenError:
                    continue
                return syn.FamApp(fam, arg)
        return rng.choice(bases)

    def _shuffled(self, items):
        items = list(items)
        self.rng.shuffle(items)
        return items

    # -- inhabitation ----------------------------------------------------

    def object_of(self, csig, g, fam, depth):
        """An object of family ``fam``; raises GenError when no inhabitant
        is found within the depth budget."""
        if isinstance(fam, syn.Pi) and (depth > 0 or self.rng.random() < 0.9):
            x = self._binder(g)
            cod = syn.subst_single(fam.cod, fam.var, syn.Var(x))
            body = self.object_of(csig, g.extended(x, fam.dom), cod, depth - 1)
            return syn.Lam(x, fam.dom, body)
        return self._spine_of(csig, g, fam, depth)

    def _heads(self, csig, g):
        heads = [(syn.Var(n), f) for n, f in g]
        for name, classifier in csig:
            if not isinstance(classifier, (syn.TypeKind, syn.PiK)):
                heads.append((syn.Const(name), classifier))
        return heads

    def _erasure_reachable(self, head_fam, target_tau):
        tau = er.erase_family(head_fam)
        hops = 0
        while True:
            if tau == target_tau:
                return True
            if not isinstance(tau, er.Arrow) or hops > 8:
                return False
            tau = tau.cod
            hops += 1

    def _spine_of(self, csig, g, fam, depth):
        target_tau = er.erase_family(fam)
        delta = er.erase_context(g)
        for head, head_fam in self._shuffled(self._heads(csig, g)):
            if not self._erasure_reachable(head_fam, target_tau):
                continue
            try:
                return self._grow_spine(csig, g, delta, head, head_fam, fam, depth)
            except GenError:
                continue
        raise GenError("no inhabitant of %r" % (fam,))

    def _grow_spine(self, csig, g, delta, head, head_fam, target, depth):
        for _ in range(10):
            r = eq.fam_eq(csig, delta, head_fam, target, er.TYPE_MINUS)
            if r.ok:
                return head
            if not isinstance(head_fam, syn.Pi) or depth < 0:
                raise GenError("spine cannot reach target")
            arg = self.object_of(csig, g, head_fam.dom, depth - 1)
            head = syn.App(head, arg)
            head_fam = syn.subst_single(head_fam.cod, head_fam.var, arg)
        raise GenError("spine too long")

    def typed_term(self, csig, g, depth=4, tries=8):
        """A random (object, family) pair, retrying over targets."""
        for _ in range(tries):
            fam = self.type_target(csig, g, depth=min(2, depth))
            try:
                return self.object_of(csig, g, fam, depth), fam
            except GenError:
                continue
        raise GenError("no typed term found")

    # -- positions and meaning-preserving rewrites -------------------------

    def _positions(self, m, g):
        out = []

        def walk(t, path, ctx):
            out.append((path, t, ctx))
            if isinstance(t, syn.App):
                walk(t.fun, path + ("fun",), ctx)
                walk(t.arg, path + ("arg",), ctx)
            elif isinstance(t, syn.Lam):
                walk(t.body, path + ("body",), ctx.extended(t.var, t.ann))

        walk(m, (), g)
        return out

    def _replace(self, m, path, new):
        if not path:
            return new
        step, rest = path[0], path[1:]
        if step == "fun":
            return syn.App(self._replace(m.fun, rest, new), m.arg)
        if step == "arg":
            return syn.App(m.fun, self._replace(m.arg, rest, new))
        return syn.Lam(m.var, m.ann, self._replace(m.body, rest, new))

    def equal_variant(self, csig, g, m, steps=None):
        """Rewrite ``m`` with 1-3 random definitional-equality-preserving
        steps: identity/constant beta expansion, eta expansion, renaming."""
        rng = self.rng
        if steps is None:
            steps = rng.randint(1, 3)
        for _ in range(steps):
            path, sub, ctx = rng.choice(self._positions(m, g))
            kind = rng.random()
            if kind < 0.35:
                fam = tc.synth_object(csig, ctx, sub)
                z = syn.fresh("z")
                new = syn.App(syn.Lam(z, fam, syn.Var(z)), sub)
            elif kind < 0.6:
                try:
                    dead_fam = self.type_target(csig, ctx, depth=0)
                    dead = self.object_of(csig, ctx, dead_fam, 1)
                except GenError:
                    continue
                z = syn.fresh("z")
                new = syn.App(syn.Lam(z, dead_fam, sub), dead)
            elif kind < 0.85:
                fam = tc.synth_object(csig, ctx, sub)
                if not isinstance(fam, syn.Pi):
                    continue
                z = syn.fresh(self._pick_pool())
                new = syn.Lam(z, fam.dom, syn.App(sub, syn.Var(z)))
            else:
                if not isinstance(sub, syn.Lam):
                    continue
                z = syn.fresh(sub.var)
                new = syn.Lam(z, sub.ann, syn.subst_single(sub.body, sub.var, syn.Var(z)))
            m = self._replace(m, path, new)
        return m

    def pair(self, csig, g, depth=4):
        """Two objects of one family: an equality-preserving rewrite of the
        first, or an independent inhabitant when one can be found."""
        m, fam = self.typed_term(csig, g, depth)
        if self.rng.random() < 0.5:
            try:
                n = self.object_of(csig, g, fam, depth)
                return m, n, fam
            except GenError:
                pass
        return m, self.equal_variant(csig, g, m), fam

    def redex(self, csig, g, depth=3):
        """A well-typed object whose head weak-head-reduces."""
        m, fam = self.typed_term(csig, g, depth)
        z = syn.fresh("z")
        if isinstance(m, syn.App) and self.rng.random() < 0.5:
            fun_fam = tc.synth_object(csig, g, m.fun)
            wrapped = syn.App(syn.App(syn.Lam(z, fun_fam, syn.Var(z)), m.fun), m.arg)
            return wrapped, fam
        return syn.App(syn.Lam(z, fam, syn.Var(z)), m), fam

    def family_pair(self, csig, g, depth=3):
        """Two families of kind ``type`` related by rewriting the objects
        embedded in the first."""
        fam = self.type_target(csig, g, depth=2)
        return fam, self._family_variant(csig, g, fam, depth)

    def _family_variant(self, csig, g, fam, depth):
        if isinstance(fam, syn.FamConst):
            return fam
        if isinstance(fam, syn.FamApp):
            return syn.FamApp(
                self._family_variant(csig, g, fam.fam, depth),
                self.equal_variant(csig, g, fam.arg),
            )
        x = fam.var
        g2 = g.extended(x, fam.dom) if not g.declares(x) else None
        if g2 is None:
            x = syn.fresh(fam.var)
            g2 = g.extended(x, fam.dom)
            fam = syn.Pi(x, fam.dom, syn.subst_single(fam.cod, fam.var, syn.Var(x)))
        return syn.Pi(
            x,
            self._family_variant(csig, g, fam.dom, depth),
            self._family_variant(csig, g2, fam.cod, depth),
        )
