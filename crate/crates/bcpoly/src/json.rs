//! JSON encoding of the domain types, with exact decoders. Partitions are
//! integer arrays, rationals are numerator/denominator decimal strings (so
//! arbitrary precision survives the trip), polynomials are term lists keyed
//! by partition. Encoders emit compact deterministic JSON; every encoder has
//! a decoder that reproduces the original value exactly.

use crate::asymptotics::{ConvergenceRow, GrowthRow, Parity, RootSystem, SeriesEntry};
use crate::interp::ShiftedSymPoly;
use crate::jacobi::TorusPoly;
use crate::multipoly::UniPoly;
use crate::partition::Partition;
use crate::rational::Q;
use crate::symfun::SymPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;

/// An exact rational as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalDto {
    pub num: String,
    pub den: String,
}

impl RationalDto {
    pub fn encode(x: &Q) -> Self {
        RationalDto { num: x.numer().to_string(), den: x.denom().to_string() }
    }

    pub fn decode(&self) -> Result<Q> {
        let num = BigInt::from_str(&self.num)
            .map_err(|_| Error::MalformedRational(self.num.clone()))?;
        let den = BigInt::from_str(&self.den)
            .map_err(|_| Error::MalformedRational(self.den.clone()))?;
        if den.is_zero() {
            return Err(Error::MalformedRational(format!("{}/{}", self.num, self.den)));
        }
        Ok(Q::new(num, den))
    }
}

/// One polynomial term: the indexing partition and an exact coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDto {
    pub partition: Vec<usize>,
    pub num: String,
    pub den: String,
}

fn encode_terms(coeffs: &BTreeMap<Partition, Q>) -> Vec<TermDto> {
    coeffs
        .iter()
        .map(|(lam, c)| {
            let r = RationalDto::encode(c);
            TermDto { partition: lam.parts().to_vec(), num: r.num, den: r.den }
        })
        .collect()
}

fn decode_terms(terms: &[TermDto]) -> Result<BTreeMap<Partition, Q>> {
    let mut out = BTreeMap::new();
    for t in terms {
        let lam = Partition::new(t.partition.clone())?;
        let c = RationalDto { num: t.num.clone(), den: t.den.clone() }.decode()?;
        if out.insert(lam, c).is_some() {
            return Err(Error::Domain("duplicate partition key in term list".into()));
        }
    }
    Ok(out)
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Domain(format!("invalid JSON: {e}")))
}

/// A partition encodes as a plain integer array, e.g. `[3,1]`.
pub fn partition_to_json(lam: &Partition) -> String {
    serde_json::to_string(&lam.parts().to_vec()).expect("serializing integers cannot fail")
}

pub fn partition_from_json(text: &str) -> Result<Partition> {
    Partition::new(parse::<Vec<usize>>(text)?)
}

/// A symmetric polynomial encodes as a bare term list; the variable count is
/// context the caller must supply to decode.
pub fn sym_poly_to_json(p: &SymPoly) -> String {
    serde_json::to_string(&encode_terms(&p.coeffs)).expect("term DTOs always serialize")
}

pub fn sym_poly_from_json(text: &str, n: usize) -> Result<SymPoly> {
    let coeffs = decode_terms(&parse::<Vec<TermDto>>(text)?)?;
    for lam in coeffs.keys() {
        if lam.len() > n {
            return Err(Error::Domain(format!(
                "term {lam} does not fit in {n} variables"
            )));
        }
    }
    Ok(SymPoly { n, coeffs })
}

#[derive(Serialize, Deserialize)]
struct TorusPolyDto {
    n: usize,
    basis: String,
    terms: Vec<TermDto>,
}

/// A torus polynomial carries its rank and basis tag:
/// `{"n": …, "basis": "y-monomial", "terms": […]}`.
pub fn torus_poly_to_json(p: &TorusPoly) -> String {
    let dto = TorusPolyDto {
        n: p.n,
        basis: "y-monomial".into(),
        terms: encode_terms(&p.coeffs),
    };
    serde_json::to_string(&dto).expect("term DTOs always serialize")
}

pub fn torus_poly_from_json(text: &str) -> Result<TorusPoly> {
    let dto: TorusPolyDto = parse(text)?;
    if dto.basis != "y-monomial" {
        return Err(Error::Domain(format!("unsupported basis {:?}", dto.basis)));
    }
    let coeffs = decode_terms(&dto.terms)?;
    for lam in coeffs.keys() {
        if lam.len() > dto.n {
            return Err(Error::Domain(format!(
                "term {lam} does not fit in {} variables",
                dto.n
            )));
        }
    }
    Ok(TorusPoly { n: dto.n, coeffs })
}

#[derive(Serialize, Deserialize)]
struct ShiftedPolyDto {
    n: usize,
    theta: RationalDto,
    h: RationalDto,
    basis: String,
    terms: Vec<TermDto>,
}

/// A shifted symmetric polynomial carries `(n, θ, h)` header fields and its
/// coefficients over the monomials in the shifted variables `u_i`.
pub fn shifted_poly_to_json(p: &ShiftedSymPoly) -> String {
    let dto = ShiftedPolyDto {
        n: p.n,
        theta: RationalDto::encode(&p.theta),
        h: RationalDto::encode(&p.h),
        basis: "u-monomial".into(),
        terms: encode_terms(&p.coeffs),
    };
    serde_json::to_string(&dto).expect("term DTOs always serialize")
}

pub fn shifted_poly_from_json(text: &str) -> Result<ShiftedSymPoly> {
    let dto: ShiftedPolyDto = parse(text)?;
    if dto.basis != "u-monomial" {
        return Err(Error::Domain(format!("unsupported basis {:?}", dto.basis)));
    }
    Ok(ShiftedSymPoly {
        n: dto.n,
        theta: dto.theta.decode()?,
        h: dto.h.decode()?,
        coeffs: decode_terms(&dto.terms)?,
    })
}

/// A one-variable polynomial encodes as its ascending coefficient array.
pub fn uni_poly_to_json(p: &UniPoly) -> String {
    let dtos: Vec<RationalDto> = p.coeffs().iter().map(RationalDto::encode).collect();
    serde_json::to_string(&dtos).expect("rational DTOs always serialize")
}

pub fn uni_poly_from_json(text: &str) -> Result<UniPoly> {
    let dtos: Vec<RationalDto> = parse(text)?;
    let coeffs: Result<Vec<Q>> = dtos.iter().map(RationalDto::decode).collect();
    Ok(UniPoly::new(coeffs?))
}

/// JSON mirror of one convergence-experiment table row.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConvergenceRowDto {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub sup_error: f64,
    pub grid_size: usize,
}

pub fn convergence_rows_to_json(rows: &[ConvergenceRow]) -> String {
    let dtos: Vec<ConvergenceRowDto> = rows
        .iter()
        .map(|r| ConvergenceRowDto {
            n: r.n,
            lambda: r.lambda.parts().to_vec(),
            sup_error: r.sup_error,
            grid_size: r.grid_size,
        })
        .collect();
    serde_json::to_string(&dtos).expect("row DTOs always serialize")
}

pub fn convergence_rows_from_json(text: &str) -> Result<Vec<ConvergenceRow>> {
    parse::<Vec<ConvergenceRowDto>>(text)?
        .into_iter()
        .map(|d| {
            Ok(ConvergenceRow {
                n: d.n,
                lambda: Partition::new(d.lambda)?,
                sup_error: d.sup_error,
                grid_size: d.grid_size,
            })
        })
        .collect()
}

/// JSON mirror of one moment-growth report row.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrowthRowDto {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub one_box: RationalDto,
    pub two_box: RationalDto,
    pub bound_holds: bool,
    pub size_ratio: f64,
    pub moment_ratio: f64,
}

pub fn growth_rows_to_json(rows: &[GrowthRow]) -> String {
    let dtos: Vec<GrowthRowDto> = rows
        .iter()
        .map(|r| GrowthRowDto {
            n: r.n,
            lambda: r.lambda.parts().to_vec(),
            one_box: RationalDto::encode(&r.one_box),
            two_box: RationalDto::encode(&r.two_box),
            bound_holds: r.bound_holds,
            size_ratio: r.size_ratio,
            moment_ratio: r.moment_ratio,
        })
        .collect();
    serde_json::to_string(&dtos).expect("row DTOs always serialize")
}

pub fn growth_rows_from_json(text: &str) -> Result<Vec<GrowthRow>> {
    parse::<Vec<GrowthRowDto>>(text)?
        .into_iter()
        .map(|d| {
            Ok(GrowthRow {
                n: d.n,
                lambda: Partition::new(d.lambda)?,
                one_box: d.one_box.decode()?,
                two_box: d.two_box.decode()?,
                bound_holds: d.bound_holds,
                size_ratio: d.size_ratio,
                moment_ratio: d.moment_ratio,
            })
        })
        .collect()
}

/// JSON mirror of one normalization-ratio row.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RatioRowDto {
    pub n: usize,
    pub ratio: RationalDto,
}

pub fn ratio_rows_to_json(rows: &[(usize, Q)]) -> String {
    let dtos: Vec<RatioRowDto> = rows
        .iter()
        .map(|(n, r)| RatioRowDto { n: *n, ratio: RationalDto::encode(r) })
        .collect();
    serde_json::to_string(&dtos).expect("row DTOs always serialize")
}

pub fn ratio_rows_from_json(text: &str) -> Result<Vec<(usize, Q)>> {
    parse::<Vec<RatioRowDto>>(text)?
        .into_iter()
        .map(|d| Ok((d.n, d.ratio.decode()?)))
        .collect()
}

#[derive(Serialize, Deserialize)]
struct SeriesEntryDto {
    series_id: u32,
    group: String,
    subgroup: String,
    theta: RationalDto,
    a: RationalDto,
    b: RationalDto,
    root_system: String,
    parity: Option<String>,
    dn_caveat: bool,
}

pub fn series_entry_to_json(entry: &SeriesEntry) -> String {
    let dto = SeriesEntryDto {
        series_id: entry.series_id,
        group: entry.group.clone(),
        subgroup: entry.subgroup.clone(),
        theta: RationalDto::encode(&entry.theta),
        a: RationalDto::encode(&entry.a),
        b: RationalDto::encode(&entry.b),
        root_system: entry.root_system.to_string(),
        parity: entry.parity.map(|p| p.to_string()),
        dn_caveat: entry.dn_caveat,
    };
    serde_json::to_string(&dto).expect("series DTOs always serialize")
}

pub fn series_entry_from_json(text: &str) -> Result<SeriesEntry> {
    let dto: SeriesEntryDto = parse(text)?;
    let root_system = match dto.root_system.as_str() {
        "B_n" => RootSystem::B,
        "C_n" => RootSystem::C,
        "D_n" => RootSystem::D,
        "BC_n" => RootSystem::BC,
        other => return Err(Error::Domain(format!("unknown root system {other:?}"))),
    };
    let parity = match dto.parity.as_deref() {
        None => None,
        Some("even") => Some(Parity::Even),
        Some("odd") => Some(Parity::Odd),
        Some(other) => return Err(Error::Domain(format!("unknown parity {other:?}"))),
    };
    Ok(SeriesEntry {
        series_id: dto.series_id,
        group: dto.group,
        subgroup: dto.subgroup,
        theta: dto.theta.decode()?,
        a: dto.a.decode()?,
        b: dto.b.decode()?,
        root_system,
        parity,
        dn_caveat: dto.dn_caveat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::table2_params;
    use crate::interp::interp_combinatorial;
    use crate::jacobi::{jacobi_monic, ParamTriple};
    use crate::rational::{q, qi};
    use crate::symfun::jack_polynomial;
    use crate::theta1::classical_jacobi;
    use num_traits::One;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rationals_round_trip_exactly() {
        let big = Q::new(
            BigInt::from_str("123456789012345678901234567890").unwrap(),
            BigInt::from_str("-7").unwrap(),
        );
        for x in [q(22, 7), qi(0), q(-3, 4), big] {
            let dto = RationalDto::encode(&x);
            assert_eq!(dto.decode().unwrap(), x);
        }
        assert!(RationalDto { num: "1".into(), den: "0".into() }.decode().is_err());
        assert!(RationalDto { num: "x".into(), den: "1".into() }.decode().is_err());
    }

    #[test]
    fn partitions_round_trip() {
        for lam in [p(&[]), p(&[3, 1]), p(&[5, 5, 2])] {
            assert_eq!(partition_from_json(&partition_to_json(&lam)).unwrap(), lam);
        }
        assert_eq!(partition_to_json(&p(&[3, 1])), "[3,1]");
        assert!(partition_from_json("[1,3]").is_err());
        assert!(partition_from_json("nonsense").is_err());
    }

    #[test]
    fn symmetric_polynomials_round_trip() {
        let jack = jack_polynomial(&p(&[2, 1]), 3, &q(1, 2)).unwrap();
        let text = sym_poly_to_json(&jack);
        assert_eq!(sym_poly_from_json(&text, 3).unwrap(), jack);
        // The same terms do not fit in fewer variables.
        assert!(sym_poly_from_json(&text, 1).is_err());
    }

    #[test]
    fn torus_polynomials_round_trip() {
        let params = ParamTriple::new(Q::one(), q(1, 2), q(-1, 2)).unwrap();
        let jac = jacobi_monic(&p(&[2, 1]), 2, &params).unwrap();
        let text = torus_poly_to_json(&jac);
        assert!(text.contains("\"basis\":\"y-monomial\""));
        assert_eq!(torus_poly_from_json(&text).unwrap(), jac);
        assert!(torus_poly_from_json(&text.replace("y-monomial", "z")).is_err());
    }

    #[test]
    fn shifted_polynomials_round_trip() {
        let ip = interp_combinatorial(&p(&[2, 1]), 3, &q(5, 3), &q(7, 2)).unwrap();
        let text = shifted_poly_to_json(&ip);
        let back = shifted_poly_from_json(&text).unwrap();
        assert_eq!(back, ip);
        assert!(text.contains("\"theta\":{\"num\":\"5\",\"den\":\"3\"}"));
    }

    #[test]
    fn one_variable_polynomials_round_trip() {
        let poly = classical_jacobi(4, &q(1, 2), &q(-1, 3)).unwrap();
        let text = uni_poly_to_json(&poly);
        assert_eq!(uni_poly_from_json(&text).unwrap(), poly);
        // Trailing zeros normalize away on decode.
        let padded = r#"[{"num":"1","den":"1"},{"num":"0","den":"1"}]"#;
        assert_eq!(uni_poly_from_json(padded).unwrap(), UniPoly::constant(Q::one()));
    }

    #[test]
    fn experiment_rows_round_trip() {
        let conv = vec![ConvergenceRow {
            n: 8,
            lambda: p(&[4]),
            sup_error: 0.0512,
            grid_size: 17,
        }];
        let back = convergence_rows_from_json(&convergence_rows_to_json(&conv)).unwrap();
        assert_eq!(back[0].n, 8);
        assert_eq!(back[0].lambda, p(&[4]));
        assert_eq!(back[0].sup_error, 0.0512);

        let growth = vec![GrowthRow {
            n: 4,
            lambda: p(&[2, 1]),
            one_box: q(31, 2),
            two_box: qi(77),
            bound_holds: true,
            size_ratio: 0.75,
            moment_ratio: 0.96875,
        }];
        let back = growth_rows_from_json(&growth_rows_to_json(&growth)).unwrap();
        assert_eq!(back[0].one_box, q(31, 2));
        assert_eq!(back[0].two_box, qi(77));
        assert!(back[0].bound_holds);

        let ratios = vec![(10usize, q(103, 100)), (100, q(1003, 1000))];
        assert_eq!(ratio_rows_from_json(&ratio_rows_to_json(&ratios)).unwrap(), ratios);
    }

    #[test]
    fn series_entries_round_trip() {
        for (id, parity) in [(4, None), (7, Some(Parity::Odd)), (10, Some(Parity::Even))] {
            let entry = table2_params(id, parity).unwrap();
            let back = series_entry_from_json(&series_entry_to_json(&entry)).unwrap();
            assert_eq!(back.series_id, entry.series_id);
            assert_eq!(back.group, entry.group);
            assert_eq!(back.theta, entry.theta);
            assert_eq!(back.a, entry.a);
            assert_eq!(back.b, entry.b);
            assert_eq!(back.root_system, entry.root_system);
            assert_eq!(back.parity, entry.parity);
            assert_eq!(back.dn_caveat, entry.dn_caveat);
        }
    }
}
