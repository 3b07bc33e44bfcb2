//! Serde adapters for exact integers and weight-keyed maps.

/// Big integers as decimal strings.
pub mod decimal {
    use std::str::FromStr;

    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        BigUint::from_str(&text).map_err(D::Error::custom)
    }
}

/// `BTreeMap<Weight, i64>` as a list of `{weight, mult}` records.
pub mod weight_map {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::root_system::Weight;

    #[derive(Serialize, Deserialize)]
    struct Entry {
        weight: Weight,
        mult: i64,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<Weight, i64>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Entry> = m
            .iter()
            .rev()
            .map(|(w, &mult)| Entry {
                weight: w.clone(),
                mult,
            })
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Weight, i64>, D::Error> {
        let v = Vec::<Entry>::deserialize(d)?;
        Ok(v.into_iter().map(|e| (e.weight, e.mult)).collect())
    }
}
