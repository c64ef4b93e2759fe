use crate::diffop::DiffOp;
use crate::linalg::Matrix;
use crate::ratfield::{q, Rational, RationalFunction};

use super::params::Params;

/// The operations the algebra relations need, shared by operators and
/// their representation matrices. Scalars are parameter-only functions.
pub trait Algebra: Clone {
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn scaled(&self, c: &RationalFunction) -> Self;
    fn unit(&self) -> Self;

    fn rscaled(&self, c: Rational) -> Self {
        let one = self.unit_scalar();
        self.scaled(&one.scale(&c))
    }

    fn unit_scalar(&self) -> RationalFunction;

    fn bracket(&self, o: &Self) -> Self {
        self.times(o).minus(&o.times(self))
    }

    fn anti(&self, o: &Self) -> Self {
        self.times(o).plus(&o.times(self))
    }
}

impl Algebra for DiffOp {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self.compose(o)
    }
    fn scaled(&self, c: &RationalFunction) -> Self {
        self.mul_function(c)
    }
    fn unit(&self) -> Self {
        DiffOp::identity(self.ring())
    }
    fn unit_scalar(&self) -> RationalFunction {
        RationalFunction::one(self.ring())
    }
}

impl Algebra for Matrix {
    fn plus(&self, o: &Self) -> Self {
        self.try_add(o).expect("matching shapes")
    }
    fn minus(&self, o: &Self) -> Self {
        self.try_sub(o).expect("matching shapes")
    }
    fn times(&self, o: &Self) -> Self {
        self.try_mul(o).expect("matching shapes")
    }
    fn scaled(&self, c: &RationalFunction) -> Self {
        self.scale_by(c)
    }
    fn unit(&self) -> Self {
        Matrix::identity(self.ring(), self.rows())
    }
    fn unit_scalar(&self) -> RationalFunction {
        RationalFunction::one(self.ring())
    }
}

struct Abg {
    a: RationalFunction,
    b: RationalFunction,
    g: RationalFunction,
    one: RationalFunction,
}

impl Abg {
    fn new(p: &Params) -> Abg {
        Abg {
            a: p.get("alpha"),
            b: p.get("beta"),
            g: p.get("gamma"),
            one: RationalFunction::one(p.ring()),
        }
    }

    /// `alpha (beta - gamma - 2)`.
    fn k(&self) -> RationalFunction {
        &self.a * &(&(&self.b - &self.g) - &self.one.scale(&q(2, 1)))
    }

    fn bg(&self) -> RationalFunction {
        &self.b + &self.g
    }

    fn bg2(&self) -> RationalFunction {
        &self.bg() - &self.one.scale(&q(2, 1))
    }
}

/// `2 I1^2 + alpha(beta - gamma - 2) I1 + alpha^2 (I2 - L)`, the value of `[I1, I3]`.
pub fn i1_i3_rhs<A: Algebra>(p: &Params, l: &A, i1: &A, i2: &A) -> A {
    let c = Abg::new(p);
    i1.times(i1)
        .rscaled(q(2, 1))
        .plus(&i1.scaled(&c.k()))
        .plus(&i2.minus(l).scaled(&(&c.a * &c.a)))
}

/// `-2(I1 I2 + I2 I1) + (beta + gamma - 2)(alpha L - (beta + gamma) I1) - alpha(beta - gamma - 2) I2`,
/// the value of `[I2, I3]`.
pub fn i2_i3_rhs<A: Algebra>(p: &Params, l: &A, i1: &A, i2: &A) -> A {
    let c = Abg::new(p);
    let inner = l.scaled(&c.a).minus(&i1.scaled(&c.bg()));
    i1.anti(i2)
        .rscaled(q(-2, 1))
        .plus(&inner.scaled(&c.bg2()))
        .minus(&i2.scaled(&c.k()))
}

/// The polynomial in `L`, `I1`, `I2` equal to `I3^2`.
pub fn cubic_rhs<A: Algebra>(p: &Params, l: &A, i1: &A, i2: &A) -> A {
    let c = Abg::new(p);
    let i1sq = i1.times(i1);
    let t1 = i1sq
        .times(i2)
        .plus(&i1.times(i2).times(i1))
        .plus(&i2.times(&i1sq))
        .minus(&i1sq.rscaled(q(2, 1)))
        .rscaled(q(4, 3));
    let t2 = i1.anti(i2).minus(&i1.rscaled(q(4, 3))).scaled(&c.k());
    let t3 = i1sq
        .scaled(&c.bg())
        .minus(&i1.times(l).scaled(&c.a.scale(&q(2, 1))))
        .scaled(&c.bg2());
    let d = i2.minus(l);
    let a2 = &c.a * &c.a;
    let t4 = d.times(&d).scaled(&a2);
    let g31 = &c.g.scale(&q(3, 1)) + &c.one;
    let t5 = i2.minus(&l.scaled(&g31)).scaled(&a2.scale(&q(2, 3)));
    t1.plus(&t2).plus(&t3).plus(&t4).plus(&t5)
}

/// `2(8 c1 - 1) H - H^3 + 16 H L`, the value of `[I1, I2]` for system `C`.
pub fn ef_bracket_rhs<A: Algebra>(p: &Params, l: &A, h: &A) -> A {
    let c1 = p.get("c1");
    let coef = (&c1.scale(&q(8, 1)) - &h.unit_scalar()).scale(&q(2, 1));
    h.scaled(&coef)
        .minus(&h.times(h).times(h))
        .plus(&h.times(l).rscaled(q(16, 1)))
}

/// `I1 I2 + I2 I1 + (1/2)(8 c1 - 5) H^2 - (1/8) H^4 + 4 H^2 L`.
pub fn ef_casimir<A: Algebra>(p: &Params, l: &A, i1: &A, i2: &A, h: &A) -> A {
    let c1 = p.get("c1");
    let h2 = h.times(h);
    let coef = (&c1.scale(&q(8, 1)) - &h.unit_scalar().scale(&q(5, 1))).scale(&q(1, 2));
    i1.anti(i2)
        .plus(&h2.scaled(&coef))
        .minus(&h2.times(&h2).rscaled(q(1, 8)))
        .plus(&h2.times(l).rscaled(q(4, 1)))
}

/// `32 L^2 - 16(4 c1 + 1) L + 16 c1 (2 c1 - 1)`.
pub fn ef_casimir_in_l<A: Algebra>(p: &Params, l: &A) -> A {
    let c1 = p.get("c1");
    let one = l.unit_scalar();
    let lin = (&c1.scale(&q(4, 1)) + &one).scale(&q(-16, 1));
    let cst = (&c1 * &(&c1.scale(&q(2, 1)) - &one)).scale(&q(16, 1));
    l.times(l)
        .rscaled(q(32, 1))
        .plus(&l.scaled(&lin))
        .plus(&l.unit().scaled(&cst))
}
