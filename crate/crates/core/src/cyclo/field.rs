use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

/// `Q(zeta_n)` presented as `Q[x] / Phi_n(x)`.
///
/// Fields are interned: `CycloField::get(n)` always returns the same
/// reference, so elements can carry a `&'static` handle and compare fields
/// by pointer.
pub struct CycloField {
    conductor: u32,
    /// Monic `Phi_n`, low degree first.
    phi: Vec<i64>,
    /// `x^k mod Phi_n` for `k < 2 * degree`, used to reduce products.
    powers: Vec<Vec<i64>>,
}

static REGISTRY: Lazy<Mutex<HashMap<u32, &'static CycloField>>> = Lazy::new(Default::default);

fn poly_divexact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_divexact(&num, &cyclotomic_poly(d));
        }
    }
    num
}

impl CycloField {
    pub fn get(n: u32) -> &'static CycloField {
        assert!(n >= 1, "conductor must be positive");
        let mut reg = REGISTRY.lock().unwrap();
        if let Some(f) = reg.get(&n) {
            return f;
        }
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(2 * deg);
        let mut cur = vec![0i64; deg];
        cur[0] = 1;
        for _ in 0..(2 * deg).max(1) {
            powers.push(cur.clone());
            // multiply by x and reduce
            let top = cur[deg - 1];
            for k in (1..deg).rev() {
                cur[k] = cur[k - 1] - top * phi[k];
            }
            cur[0] = -top * phi[0];
        }
        let f: &'static CycloField = Box::leak(Box::new(CycloField { conductor: n, phi, powers }));
        reg.insert(n, f);
        f
    }

    pub fn rationals() -> &'static CycloField {
        CycloField::get(1)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `[Q(zeta_n) : Q] = phi(n)`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.phi
    }

    pub(crate) fn power_of_x(&self, k: usize) -> &[i64] {
        &self.powers[k]
    }
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl Eq for CycloField {}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.conductor)
    }
}
