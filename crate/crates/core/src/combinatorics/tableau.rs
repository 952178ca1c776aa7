use super::ResidueTuple;
use crate::error::{Error, Result};

/// An `r`-tuple of Young tableaux filled with `1..=n`.
///
/// `rows[k][a][b]` is the entry in row `a`, column `b` of component `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multitableau {
    rows: Vec<Vec<Vec<usize>>>,
}

impl Multitableau {
    pub fn new(rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        for comp in &rows {
            for w in comp.windows(2) {
                if w[1].len() > w[0].len() {
                    return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
                }
            }
            if comp.iter().any(|row| row.is_empty()) {
                return Err(Error::InvalidTableau("empty row".into()));
            }
        }
        let mut all: Vec<usize> = rows.iter().flatten().flatten().copied().collect();
        all.sort_unstable();
        if all.iter().enumerate().any(|(i, &v)| v != i + 1) {
            return Err(Error::InvalidTableau("entries must be 1..=n".into()));
        }
        Ok(Self { rows })
    }

    /// One-column multitableau from the columns of each component.
    pub fn from_columns(columns: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(
            columns
                .into_iter()
                .map(|col| col.into_iter().map(|v| vec![v]).collect())
                .collect(),
        )
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows.iter().flatten().map(Vec::len).sum()
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    /// Shape: the row lengths of each component.
    pub fn shape(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|c| c.iter().map(Vec::len).collect()).collect()
    }

    /// Entries increase along rows and down columns of every component.
    pub fn is_standard(&self) -> bool {
        self.rows.iter().all(|comp| {
            let rows_ok = comp.iter().all(|row| row.windows(2).all(|p| p[0] < p[1]));
            let cols_ok = comp.windows(2).all(|p| p[1].iter().zip(&p[0]).all(|(lo, hi)| hi < lo));
            rows_ok && cols_ok
        })
    }

    pub fn is_one_column(&self) -> bool {
        self.rows.iter().flatten().all(|row| row.len() == 1)
    }

    /// Column of component `k` (0-based), top to bottom.
    pub fn column(&self, k: usize) -> Vec<usize> {
        self.rows[k].iter().map(|row| row[0]).collect()
    }

    /// The component (1-based) holding `j`.
    pub fn component_of(&self, j: usize) -> Option<usize> {
        self.rows
            .iter()
            .position(|comp| comp.iter().flatten().any(|&v| v == j))
            .map(|k| k + 1)
    }
}

/// Numbers `1, 2, ..., n` placed in turn at the bottom of the column of the
/// component named by the tuple entry.
pub fn tableau_from_tuple(lambda: &ResidueTuple) -> Multitableau {
    let mut columns = vec![Vec::new(); lambda.r() as usize];
    for (j, &k) in lambda.entries().iter().enumerate() {
        columns[k as usize - 1].push(j + 1);
    }
    Multitableau::from_columns(columns).expect("columns hold 1..=n increasing")
}

/// `(p(1), ..., p(n))` with `p(j)` the component holding `j`.
pub fn tuple_from_tableau(t: &Multitableau) -> Result<ResidueTuple> {
    if !t.is_standard() {
        return Err(Error::InvalidTableau("not standard".into()));
    }
    if !t.is_one_column() {
        return Err(Error::InvalidTableau("not one-column".into()));
    }
    let entries = (1..=t.n())
        .map(|j| t.component_of(j).expect("entries are 1..=n") as u32)
        .collect();
    ResidueTuple::new(t.r() as u32, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let t = tableau_from_tuple(&ResidueTuple::new(2, vec![1, 1]).unwrap());
        assert_eq!(t.column(0), vec![1, 2]);
        assert!(t.column(1).is_empty());
        let t = tableau_from_tuple(&ResidueTuple::new(2, vec![1, 2, 1]).unwrap());
        assert_eq!(t.column(0), vec![1, 3]);
        assert_eq!(t.column(1), vec![2]);
        let t = Multitableau::from_columns(vec![vec![], vec![], vec![1]]).unwrap();
        assert_eq!(tuple_from_tableau(&t).unwrap().entries(), &[3]);
    }

    #[test]
    fn rejects_bad_tableaux() {
        let t = Multitableau::from_columns(vec![vec![2, 1]]).unwrap();
        assert!(!t.is_standard());
        assert!(tuple_from_tableau(&t).is_err());
        let t = Multitableau::new(vec![vec![vec![1, 2]]]).unwrap();
        assert!(t.is_standard());
        assert!(tuple_from_tableau(&t).is_err());
        assert!(Multitableau::from_columns(vec![vec![1, 3]]).is_err());
        assert!(Multitableau::new(vec![vec![vec![1], vec![2, 3]]]).is_err());
    }

    #[test]
    fn general_shape_standardness() {
        let t = Multitableau::new(vec![vec![vec![1, 2], vec![3]], vec![vec![4]]]).unwrap();
        assert!(t.is_standard());
        assert_eq!(t.shape(), vec![vec![2, 1], vec![1]]);
        let t = Multitableau::new(vec![vec![vec![1, 3], vec![2]]]).unwrap();
        assert!(t.is_standard());
        let t = Multitableau::new(vec![vec![vec![2, 3], vec![1]]]).unwrap();
        assert!(!t.is_standard());
    }
}
