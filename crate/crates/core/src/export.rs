//! JSON export of operator matrices.

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::operators::Operator;
use crate::scalar::Exact;

fn big_to_json(v: &num_bigint::BigInt) -> Value {
    match v.to_i64() {
        Some(small) => Value::from(small),
        None => Value::from(v.to_string()),
    }
}

fn header<T>(op: &Operator<T>, entries: Vec<Value>) -> Value
where
    T: crate::scalar::Scalar,
{
    let tag = op.tag();
    let (rows, cols) = op.matrix().dims();
    json!({
        "spec": tag.spec,
        "basis": "graded-lex",
        "normalization": tag.normalization.name(),
        "dims": [rows, cols],
        "entries": entries,
    })
}

/// `{"spec", "basis", "normalization", "dims", "entries": [[row, col, num, den]]}`,
/// entries row-major ascending.
pub fn exact_operator_json(op: &Operator<Exact>) -> Value {
    let entries = op
        .matrix()
        .entries()
        .map(|(r, c, v)| json!([r, c, big_to_json(v.numer()), big_to_json(v.denom())]))
        .collect();
    header(op, entries)
}

/// Same layout with `[row, col, value]` entries.
pub fn float_operator_json(op: &Operator<f64>) -> Value {
    let entries = op
        .matrix()
        .entries()
        .map(|(r, c, v)| json!([r, c, v]))
        .collect();
    header(op, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::AlgebraSpec;
    use crate::operators::{normalize, FockSpace};

    #[test]
    fn exact_layout() {
        let s = FockSpace::new(AlgebraSpec::fermi(2, 2).unwrap());
        let v = exact_operator_json(&s.annihilation(0).unwrap());
        assert_eq!(v["spec"], json!({"kind": "fermi", "n": 2, "p": 2}));
        assert_eq!(v["basis"], "graded-lex");
        assert_eq!(v["normalization"], "unnormalized");
        assert_eq!(v["dims"], json!([4, 4]));
        // ranks: 0 (0,0), 1 (0,1), 2 (1,0), 3 (1,1)
        assert_eq!(v["entries"], json!([[0, 2, 1, 1], [1, 3, 1, 2]]));
    }

    #[test]
    fn float_layout() {
        let s = FockSpace::new(AlgebraSpec::fermi(2, 2).unwrap());
        let op = normalize(&s.creation(1).unwrap(), &s.gram()).unwrap();
        let v = float_operator_json(&op);
        assert_eq!(v["normalization"], "orthonormal");
        let entries = v["entries"].as_array().unwrap();
        assert_eq!(entries[0], json!([1, 0, 1.0]));
        assert_eq!(entries[1][0], 3);
        assert!((entries[1][2].as_f64().unwrap() + 0.5f64.sqrt()).abs() < 1e-15);
    }
}
