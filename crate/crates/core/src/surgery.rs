//! The glued curve with a cusp `z1^k = z2^(k+1)` implanted at every integer
//! `2 <= k <= max_k`, the weakly holomorphic function built from the local
//! germs `h_k = z1/z2`, and power bounds over regions containing finitely
//! many of the cusps.
//!
//! A region is described by the largest site index `K` it contains. Germs at
//! a site are pullbacks along that site's normalization, so everything
//! reduces to [`CuspCurve`] computations.

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::Signed;
use serde::Serialize;

use crate::curve::CuspCurve;
use crate::error::{Error, Result};
use crate::germ::{Decision, LaurentGerm};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Site {
    pub index: i64,
    #[serde(serialize_with = "ser_ratio")]
    pub center: Rational64,
    #[serde(serialize_with = "ser_ratio")]
    pub radius: Rational64,
    pub model: CuspCurve,
}

fn ser_ratio<S: serde::Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl Site {
    /// The standard site: cusp `z1^k = z2^(k+1)` at the point `k`, disk radius 1/3.
    pub fn standard(k: i64) -> Result<Self> {
        Self::new(k, Rational64::from_integer(k), Rational64::new(1, 3))
    }

    /// A site with an arbitrary center and radius, still modelled on the
    /// cusp `z1^k = z2^(k+1)`.
    pub fn new(k: i64, center: Rational64, radius: Rational64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!(
                "site index must be at least 2, got {k}"
            )));
        }
        if radius <= Rational64::from_integer(0) {
            return Err(Error::InvalidArgument("disk radius must be positive".into()));
        }
        Ok(Self {
            index: k,
            center,
            radius,
            model: CuspCurve::new(k, k + 1)?,
        })
    }

    /// `k(k - 1)`: the pullback of `m^(k-1)` starts at this exponent.
    pub fn ideal_exponent(&self) -> i64 {
        self.index * (self.index - 1)
    }

    pub fn ideal_power(&self) -> i64 {
        self.index - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryCurve {
    sites: Vec<Site>,
}

impl SurgeryCurve {
    /// The curve with sites `2..=max_k`; fails unless the gluing data
    /// validates.
    pub fn build_standard(max_k: i64) -> Result<Self> {
        if max_k < 2 {
            return Err(Error::InvalidArgument(format!(
                "max-k must be at least 2, got {max_k}"
            )));
        }
        let sites = (2..=max_k).map(Site::standard).collect::<Result<Vec<_>>>()?;
        let x = Self { sites };
        if !x.validate_star() {
            return Err(Error::InvalidArgument("surgery disks overlap".into()));
        }
        Ok(x)
    }

    /// Arbitrary sites with strictly increasing indices. The disks are not
    /// checked here; see [`Self::validate_star`].
    pub fn from_sites(sites: Vec<Site>) -> Result<Self> {
        if sites.is_empty() {
            return Err(Error::InvalidArgument("a surgery curve needs a site".into()));
        }
        if sites.windows(2).any(|w| w[0].index >= w[1].index) {
            return Err(Error::InvalidArgument(
                "site indices must be strictly increasing".into(),
            ));
        }
        Ok(Self { sites })
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn max_index(&self) -> i64 {
        self.sites.last().map_or(0, |s| s.index)
    }

    pub fn site(&self, k: i64) -> Option<&Site> {
        self.sites
            .binary_search_by_key(&k, |s| s.index)
            .ok()
            .map(|i| &self.sites[i])
    }

    /// Gluing condition on the data: closed disks are pairwise disjoint, so
    /// no disk contains another site's center. Continuity of the gluing
    /// across each cusp holds because every normalization is a homeomorphism.
    pub fn validate_star(&self) -> bool {
        self.sites.iter().enumerate().all(|(i, a)| {
            self.sites[i + 1..]
                .iter()
                .all(|b| (a.center - b.center).abs() > a.radius + b.radius)
        })
    }

    /// `n_Omega` for the region holding sites up to `region`: the largest
    /// conductor `k(k-1)` among them.
    pub fn n_omega(&self, region: i64) -> Result<i64> {
        self.check_region(region)?;
        Ok(self
            .sites
            .iter()
            .take_while(|s| s.index <= region)
            .map(|s| s.model.semigroup().conductor())
            .max()
            .unwrap_or(0))
    }

    fn check_region(&self, region: i64) -> Result<()> {
        let lowest = self.sites.first().map_or(2, |s| s.index);
        if region < lowest || region > self.max_index() {
            return Err(Error::InvalidArgument(format!(
                "region index {region} outside [{lowest}, {}]",
                self.max_index()
            )));
        }
        Ok(())
    }

    /// Smallest `k` such that `f^n` is certainly not holomorphic at every
    /// site from `k` to the last one, for the default global section.
    /// This is `n + 1`, since `n < k` never lies in `<k, k+1>`.
    pub fn no_global_power_witness(&self, n: i64) -> Result<i64> {
        GlobalSection::standard(self).witness(self, n)
    }
}

/// Per-site germs of the global function `f`, each congruent to `h_k = t`
/// modulo the pullback of `m^(k-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlobalSection {
    per_site: BTreeMap<i64, LaurentGerm>,
}

/// One row of [`GlobalSection::check_power`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SiteDecision {
    pub site: i64,
    pub decision: Decision,
    pub germ: LaurentGerm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerTable {
    pub n: i64,
    pub region: i64,
    pub rows: Vec<SiteDecision>,
    pub overall: Decision,
}

impl GlobalSection {
    /// Default section: `t + O(t^(k(k-1)))` at every site.
    pub fn standard(x: &SurgeryCurve) -> Self {
        Self::make_global_rado(x, &BTreeMap::new()).expect("no explicit tails to reject")
    }

    /// Builds the section `t + tail_k`. Sites without an explicit tail get
    /// the unknown tail `O(t^(k(k-1)))`; explicit tails must lie in the
    /// pullback of `m^(k-1)`.
    pub fn make_global_rado(x: &SurgeryCurve, tails: &BTreeMap<i64, LaurentGerm>) -> Result<Self> {
        if let Some(k) = tails.keys().find(|k| x.site(**k).is_none()) {
            return Err(Error::InvalidArgument(format!("no site with index {k}")));
        }
        let mut per_site = BTreeMap::new();
        for site in x.sites() {
            let h = LaurentGerm::t_pow(1);
            let germ = match tails.get(&site.index) {
                Some(tail) => {
                    check_tail(site, tail)?;
                    h.add(tail)
                }
                None => h.truncate(site.ideal_exponent()),
            };
            per_site.insert(site.index, germ);
        }
        Ok(Self { per_site })
    }

    pub fn germ(&self, k: i64) -> Option<&LaurentGerm> {
        self.per_site.get(&k)
    }

    pub fn germs(&self) -> impl Iterator<Item = (i64, &LaurentGerm)> {
        self.per_site.iter().map(|(k, g)| (*k, g))
    }

    /// Decision for `f^n` at a single site.
    pub fn power_decision(&self, x: &SurgeryCurve, k: i64, n: i64) -> Result<Decision> {
        let (site, germ) = self.lookup(x, k)?;
        Ok(site.model.is_holomorphic_at_cusp(&germ.pow(to_exponent(n)?)))
    }

    fn lookup<'a>(&'a self, x: &'a SurgeryCurve, k: i64) -> Result<(&'a Site, &'a LaurentGerm)> {
        match (x.site(k), self.per_site.get(&k)) {
            (Some(s), Some(g)) => Ok((s, g)),
            _ => Err(Error::InvalidArgument(format!("no site with index {k}"))),
        }
    }

    /// Start of the final run of sites where `f^n` is certainly not
    /// holomorphic; the run must reach the last site.
    pub fn witness(&self, x: &SurgeryCurve, n: i64) -> Result<i64> {
        let no_witness = Error::NoWitnessInRange {
            n,
            max_k: x.max_index(),
        };
        if x.max_index() <= n {
            return Err(no_witness);
        }
        let mut start = None;
        for site in x.sites().iter().rev() {
            if self.power_decision(x, site.index, n)?.is_no() {
                start = Some(site.index);
            } else {
                break;
            }
        }
        start.ok_or(no_witness)
    }

    /// Smallest site where `f^n` is certainly not holomorphic.
    pub fn first_witness(&self, x: &SurgeryCurve, n: i64) -> Result<Option<i64>> {
        for site in x.sites() {
            if self.power_decision(x, site.index, n)?.is_no() {
                return Ok(Some(site.index));
            }
        }
        Ok(None)
    }

    /// Decision for `f^n` at every site up to `region`.
    pub fn check_power(&self, x: &SurgeryCurve, n: i64, region: i64) -> Result<PowerTable> {
        x.check_region(region)?;
        let e = to_exponent(n)?;
        let rows: Vec<SiteDecision> = x
            .sites()
            .iter()
            .take_while(|s| s.index <= region)
            .map(|s| {
                let germ = self.per_site[&s.index].pow(e);
                SiteDecision {
                    site: s.index,
                    decision: s.model.is_holomorphic_at_cusp(&germ),
                    germ,
                }
            })
            .collect();
        let overall = rows
            .iter()
            .fold(Decision::CertainlyYes, |acc, r| acc.and(r.decision.clone()));
        Ok(PowerTable {
            n,
            region,
            rows,
            overall,
        })
    }
}

fn to_exponent(n: i64) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("power must be >= 0, got {n}")))
}

fn check_tail(site: &Site, tail: &LaurentGerm) -> Result<()> {
    let reject = |reason: String| Error::TailOutsideIdeal {
        site: site.index,
        power: site.ideal_power(),
        reason,
    };
    let s = site.model.semigroup();
    if let Some(e) = tail
        .exponents()
        .find(|e| !s.in_ideal_power(site.ideal_power(), *e))
    {
        return Err(reject(format!(
            "exponent {e} is not a sum of {} generators",
            site.ideal_power()
        )));
    }
    if let Some(t) = tail.tail_bound() {
        if t < site.ideal_exponent() {
            return Err(reject(format!(
                "unknown terms from t^{t} on reach below t^{}",
                site.ideal_exponent()
            )));
        }
    }
    Ok(())
}
