//! Group orders as arbitrary-precision integers that serialize as plain JSON
//! numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(pub BigUint);

impl Order {
    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }
}

impl From<BigUint> for Order {
    fn from(n: BigUint) -> Self {
        Order(n)
    }
}

impl From<u64> for Order {
    fn from(n: u64) -> Self {
        Order(BigUint::from(n))
    }
}

impl PartialEq<u64> for Order {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n =
            serde_json::Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?;
        n.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(deserializer)?;
        BigUint::from_str(&n.to_string())
            .map(Order)
            .map_err(|_| de::Error::custom(format!("not a non-negative integer: {n}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_orders_are_json_numbers() {
        let big = Order(BigUint::from(u64::MAX) * BigUint::from(1000u32));
        let text = serde_json::to_string(&vec![big.clone(), Order::from(7)]).unwrap();
        assert_eq!(text, "[18446744073709551615000,7]");
        let back: Vec<Order> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, vec![big, Order::from(7)]);
        assert!(serde_json::from_str::<Order>("-3").is_err());
    }
}
