//! Serializable views of polygons and certificates. Field names and layout
//! are the stable JSON schema.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use pade_galois::galois::CycleType;
use pade_galois::{
    AnEvidence, FamilySpec, GaloisCertificate, IrreducibilityEvidence, NewtonPolygon, Polynomial,
};

/// `a/b` in lowest terms, denominator always written.
pub fn fraction(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn coefficients(f: &Polynomial) -> Vec<String> {
    f.coeffs().iter().map(BigInt::to_string).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentDto {
    pub slope: String,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonDto {
    pub prime: u64,
    pub vertices: Vec<(usize, i64)>,
    pub segments: Vec<SegmentDto>,
    pub flatness: usize,
    pub steepness: String,
}

impl From<&NewtonPolygon> for PolygonDto {
    fn from(np: &NewtonPolygon) -> Self {
        PolygonDto {
            prime: np.prime(),
            vertices: np.vertices().to_vec(),
            segments: np
                .segments()
                .iter()
                .map(|s| SegmentDto {
                    slope: fraction(&s.slope()),
                    length: s.length(),
                })
                .collect(),
            flatness: np.flatness(),
            steepness: fraction(&np.steepness()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IrreducibilityDto {
    EisensteinDumas {
        prime: u64,
    },
    DegreeSieve {
        primes: Vec<u64>,
        surviving: Vec<usize>,
    },
    Literature {
        citation: String,
    },
    None,
}

impl From<&IrreducibilityEvidence> for IrreducibilityDto {
    fn from(e: &IrreducibilityEvidence) -> Self {
        match e {
            IrreducibilityEvidence::EisensteinDumas { prime } => {
                IrreducibilityDto::EisensteinDumas { prime: *prime }
            }
            IrreducibilityEvidence::DegreeSieve { primes, surviving } => {
                IrreducibilityDto::DegreeSieve {
                    primes: primes.clone(),
                    surviving: surviving.clone(),
                }
            }
            IrreducibilityEvidence::Literature { citation } => IrreducibilityDto::Literature {
                citation: (*citation).to_owned(),
            },
            IrreducibilityEvidence::None => IrreducibilityDto::None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AnContainmentDto {
    NewtonIndexPrime {
        q: u64,
        newton_index: u64,
    },
    DedekindCycle {
        prime: u64,
        q: u64,
        degrees: Vec<usize>,
    },
    SmallDegreeExclusion {
        primes: Vec<u64>,
        cycle_types: Vec<CycleType>,
        eliminated: Vec<String>,
    },
    Trivial,
    None,
}

impl From<&AnEvidence> for AnContainmentDto {
    fn from(e: &AnEvidence) -> Self {
        match e {
            AnEvidence::NewtonIndexPrime { q, newton_index } => {
                AnContainmentDto::NewtonIndexPrime {
                    q: *q,
                    newton_index: *newton_index,
                }
            }
            AnEvidence::DedekindCycle { prime, degrees, q } => AnContainmentDto::DedekindCycle {
                prime: *prime,
                q: *q,
                degrees: degrees.clone(),
            },
            AnEvidence::SmallDegreeExclusion {
                primes,
                cycle_types,
                eliminated,
            } => AnContainmentDto::SmallDegreeExclusion {
                primes: primes.clone(),
                cycle_types: cycle_types.clone(),
                eliminated: eliminated.iter().map(|s| (*s).to_owned()).collect(),
            },
            AnEvidence::Trivial => AnContainmentDto::Trivial,
            AnEvidence::None => AnContainmentDto::None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDto {
    pub family: String,
    pub u: u64,
    pub v: i64,
    pub degree: usize,
    pub irreducibility: IrreducibilityDto,
    pub an_containment: AnContainmentDto,
    pub newton_index: u64,
    pub square_class: String,
    pub conclusion: String,
}

/// `(family, u, v)` with `e_n = P(n, 0)` and `L_n^<r> = P(n, r)`.
pub fn spec_parameters(spec: &FamilySpec) -> (String, u64, i64) {
    let family = spec.family().to_string();
    match spec {
        FamilySpec::P { u, v } | FamilySpec::Q { u, v } => (family, *u, *v as i64),
        FamilySpec::Exp { n } => (family, *n, 0),
        FamilySpec::ShiftedGlp { n, r } => (family, *n, *r),
        FamilySpec::Glp { n, .. } => (family, *n, 0),
    }
}

impl CertificateDto {
    pub fn new(spec: &FamilySpec, cert: &GaloisCertificate) -> Self {
        let (family, u, v) = spec_parameters(spec);
        CertificateDto {
            family,
            u,
            v,
            degree: cert.degree,
            irreducibility: (&cert.irreducibility).into(),
            an_containment: (&cert.an_containment).into(),
            newton_index: cert.newton_index,
            square_class: cert.square_class.to_string(),
            conclusion: cert.conclusion.to_string(),
        }
    }
}
