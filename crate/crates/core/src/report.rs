use serde::{Deserialize, Serialize};

/// A named check and whether it held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub holds: bool,
}

impl Certificate {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        Self {
            name: name.into(),
            holds,
        }
    }
}

/// Parameters `[[n, k_Q, d_Q]]` of a stabilizer code and how they were obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumCodeReport {
    pub n: usize,
    pub k_q: usize,
    pub d_q: usize,
    /// `d_q` was enumerated rather than taken from a bound.
    pub d_exact: bool,
    /// Lower bound on `d_q` recorded by the construction, if any.
    pub bound: Option<usize>,
    /// A minimum-weight element of the large code outside the small one, as a Pauli string.
    pub witness: Option<String>,
    pub certificates: Vec<Certificate>,
    pub trace: Vec<String>,
}

impl QuantumCodeReport {
    pub fn all_verified(&self) -> bool {
        self.certificates.iter().all(|c| c.holds)
    }

    pub fn params(&self) -> String {
        let d = if self.d_exact {
            self.d_q.to_string()
        } else {
            format!("≥{}", self.d_q)
        };
        format!("[[{}, {}, {}]]", self.n, self.k_q, d)
    }
}
