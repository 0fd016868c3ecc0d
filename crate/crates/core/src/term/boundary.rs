use super::{ObjTerm, OneCell, TermError, TwoCell};

pub type ValidationResult = Result<(), TermError>;

fn t(a: &ObjTerm, b: &ObjTerm) -> ObjTerm {
    ObjTerm::tensor(a.clone(), b.clone())
}

/// Source and target objects, checking composability along the way.
pub(crate) fn objects(c: &OneCell) -> Result<(ObjTerm, ObjTerm), TermError> {
    use OneCell::*;
    Ok(match c {
        Id(x) => (x.clone(), x.clone()),
        Assoc(x, y, z) => (t(&t(x, y), z), t(x, &t(y, z))),
        AssocInv(x, y, z) => (t(x, &t(y, z)), t(&t(x, y), z)),
        LUnit(x) => (t(&ObjTerm::Unit, x), x.clone()),
        LUnitInv(x) => (x.clone(), t(&ObjTerm::Unit, x)),
        RUnit(x) => (t(x, &ObjTerm::Unit), x.clone()),
        RUnitInv(x) => (x.clone(), t(x, &ObjTerm::Unit)),
        Braid(x, y) => (t(x, y), t(y, x)),
        BraidInv(x, y) => (t(y, x), t(x, y)),
        Tensor(f, g) => {
            let (fs, ft) = objects(f)?;
            let (gs, gt) = objects(g)?;
            (t(&fs, &gs), t(&ft, &gt))
        }
        Compose(g, f) => {
            let (fs, ft) = objects(f)?;
            let (gs, gt) = objects(g)?;
            if ft != gs {
                return Err(TermError::ComposeMismatch {
                    subterm: c.to_string(),
                    found: ft.to_string(),
                    expected: gs.to_string(),
                });
            }
            (fs, gt)
        }
    })
}

pub fn src_obj(c: &OneCell) -> Result<ObjTerm, TermError> {
    objects(c).map(|(s, _)| s)
}

pub fn tgt_obj(c: &OneCell) -> Result<ObjTerm, TermError> {
    objects(c).map(|(_, t)| t)
}

fn id(x: &ObjTerm) -> OneCell {
    OneCell::Id(x.clone())
}

fn tn(f: OneCell, g: OneCell) -> OneCell {
    OneCell::tensor(f, g)
}

fn path(cells: Vec<OneCell>) -> OneCell {
    // never called with an empty list
    OneCell::path(&cells, &ObjTerm::Unit)
}

fn comp(second: OneCell, first: OneCell) -> OneCell {
    OneCell::compose(second, first)
}

/// Checked composite `g ∘ f`.
fn comp_checked(g: &OneCell, f: &OneCell) -> Result<OneCell, TermError> {
    let c = comp(g.clone(), f.clone());
    objects(&c)?;
    Ok(c)
}

/// `(source, target)` 1-cells of a 2-cell.
pub fn boundary2(alpha: &TwoCell) -> Result<(OneCell, OneCell), TermError> {
    use OneCell::{Assoc, AssocInv, Braid, LUnit, LUnitInv, RUnit, RUnitInv};
    use TwoCell::*;
    let unit = ObjTerm::Unit;
    Ok(match alpha {
        Id2(f) => {
            objects(f)?;
            (f.clone(), f.clone())
        }
        EtaA(x, y, z) => (
            id(&t(&t(x, y), z)),
            comp(AssocInv(x.clone(), y.clone(), z.clone()), Assoc(x.clone(), y.clone(), z.clone())),
        ),
        EpsA(x, y, z) => (
            comp(Assoc(x.clone(), y.clone(), z.clone()), AssocInv(x.clone(), y.clone(), z.clone())),
            id(&t(x, &t(y, z))),
        ),
        EtaL(x) => (id(&t(&unit, x)), comp(LUnitInv(x.clone()), LUnit(x.clone()))),
        EpsL(x) => (comp(LUnit(x.clone()), LUnitInv(x.clone())), id(x)),
        EtaRu(x) => (id(&t(x, &unit)), comp(RUnitInv(x.clone()), RUnit(x.clone()))),
        EpsRu(x) => (comp(RUnit(x.clone()), RUnitInv(x.clone())), id(x)),
        EtaB(x, y) => (
            id(&t(x, y)),
            comp(OneCell::BraidInv(x.clone(), y.clone()), Braid(x.clone(), y.clone())),
        ),
        EpsB(x, y) => (
            comp(Braid(x.clone(), y.clone()), OneCell::BraidInv(x.clone(), y.clone())),
            id(&t(y, x)),
        ),
        Pi(w, x, y, z) => (
            path(vec![
                tn(Assoc(w.clone(), x.clone(), y.clone()), id(z)),
                Assoc(w.clone(), t(x, y), z.clone()),
                tn(id(w), Assoc(x.clone(), y.clone(), z.clone())),
            ]),
            path(vec![
                Assoc(t(w, x), y.clone(), z.clone()),
                Assoc(w.clone(), x.clone(), t(y, z)),
            ]),
        ),
        Mu(x, y) => (
            path(vec![
                tn(RUnitInv(x.clone()), id(y)),
                Assoc(x.clone(), unit.clone(), y.clone()),
                tn(id(x), LUnit(y.clone())),
            ]),
            id(&t(x, y)),
        ),
        Lambda(x, y) => (
            tn(LUnit(x.clone()), id(y)),
            path(vec![Assoc(unit.clone(), x.clone(), y.clone()), LUnit(t(x, y))]),
        ),
        Rho(x, y) => (
            tn(id(x), RUnitInv(y.clone())),
            path(vec![RUnitInv(t(x, y)), Assoc(x.clone(), y.clone(), unit.clone())]),
        ),
        HexL(x, y, z) => (
            path(vec![
                tn(Braid(x.clone(), y.clone()), id(z)),
                Assoc(y.clone(), x.clone(), z.clone()),
                tn(id(y), Braid(x.clone(), z.clone())),
            ]),
            path(vec![
                Assoc(x.clone(), y.clone(), z.clone()),
                Braid(x.clone(), t(y, z)),
                Assoc(y.clone(), z.clone(), x.clone()),
            ]),
        ),
        HexR(x, y, z) => (
            path(vec![
                tn(id(x), Braid(y.clone(), z.clone())),
                AssocInv(x.clone(), z.clone(), y.clone()),
                tn(Braid(x.clone(), z.clone()), id(y)),
            ]),
            path(vec![
                AssocInv(x.clone(), y.clone(), z.clone()),
                Braid(t(x, y), z.clone()),
                AssocInv(z.clone(), x.clone(), y.clone()),
            ]),
        ),
        NatA(f, g, h) => {
            let (xs, xt) = objects(f)?;
            let (ys, yt) = objects(g)?;
            let (zs, zt) = objects(h)?;
            (
                comp(
                    Assoc(xt, yt, zt),
                    tn(tn(f.clone(), g.clone()), h.clone()),
                ),
                comp(
                    tn(f.clone(), tn(g.clone(), h.clone())),
                    Assoc(xs, ys, zs),
                ),
            )
        }
        NatL(f) => {
            let (xs, xt) = objects(f)?;
            (
                comp(LUnit(xt), tn(id(&unit), f.clone())),
                comp(f.clone(), LUnit(xs)),
            )
        }
        NatRu(f) => {
            let (xs, xt) = objects(f)?;
            (
                comp(RUnit(xt), tn(f.clone(), id(&unit))),
                comp(f.clone(), RUnit(xs)),
            )
        }
        NatB(f, g) => {
            let (xs, xt) = objects(f)?;
            let (ys, yt) = objects(g)?;
            (
                comp(Braid(xt, yt), tn(f.clone(), g.clone())),
                comp(tn(g.clone(), f.clone()), Braid(xs, ys)),
            )
        }
        Interchange(f, g) => {
            let (xs, xt) = objects(f)?;
            let (ys, yt) = objects(g)?;
            (
                comp(tn(f.clone(), id(&yt)), tn(id(&xs), g.clone())),
                comp(tn(id(&xt), g.clone()), tn(f.clone(), id(&ys))),
            )
        }
        Funct2(f, f2, g, g2) => {
            let ff = comp_checked(f2, f)?;
            let gg = comp_checked(g2, g)?;
            (
                tn(ff, gg),
                comp(tn(f2.clone(), g2.clone()), tn(f.clone(), g.clone())),
            )
        }
        Funct0(x, y) => (tn(id(x), id(y)), id(&t(x, y))),
        CompAssoc(h, g, f) => {
            let gf = comp_checked(g, f)?;
            let hg = comp_checked(h, g)?;
            (comp(h.clone(), gf), comp(hg, f.clone()))
        }
        CompLUnit(f) => {
            let (_, xt) = objects(f)?;
            (comp(id(&xt), f.clone()), f.clone())
        }
        CompRUnit(f) => {
            let (xs, _) = objects(f)?;
            (comp(f.clone(), id(&xs)), f.clone())
        }
        Inv(a) => {
            let (s, t) = boundary2(a)?;
            (t, s)
        }
        VComp(b, a) => {
            let (as_, at) = boundary2(a)?;
            let (bs, bt) = boundary2(b)?;
            if at != bs {
                return Err(TermError::VCompMismatch {
                    subterm: alpha.to_string(),
                    found: at.to_string(),
                    expected: bs.to_string(),
                });
            }
            (as_, bt)
        }
        HComp(b, a) => {
            let (fs, ft) = boundary2(a)?;
            let (gs, gt) = boundary2(b)?;
            let (_, fo) = objects(&fs)?;
            let (go, _) = objects(&gs)?;
            if fo != go {
                return Err(TermError::HCompMismatch {
                    subterm: alpha.to_string(),
                    found: fo.to_string(),
                    expected: go.to_string(),
                });
            }
            (comp(gs, fs), comp(gt, ft))
        }
        Tensor2(a, b) => {
            let (fs, ft) = boundary2(a)?;
            let (gs, gt) = boundary2(b)?;
            (tn(fs, gs), tn(ft, gt))
        }
    })
}
