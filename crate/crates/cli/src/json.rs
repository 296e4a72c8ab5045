//! JSON documents for partitions, tableaux, growth grids and cartons.

use serde::{Deserialize, Serialize};

use carton_core::growth::GrowthGrid;
use carton_core::verify::SuiteReport;
use carton_core::{Carton, CartonGeometry, Cell, Corner, Face, Partition, Rectangle, StandardTableau};

pub type PartitionJson = Vec<usize>;

pub fn partition(p: &Partition) -> PartitionJson {
    p.parts().to_vec()
}

fn parse_partition(v: &[usize]) -> anyhow::Result<Partition> {
    Ok(Partition::new(v.to_vec())?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeJson {
    pub outer: PartitionJson,
    pub inner: PartitionJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: ShapeJson,
    /// `[row, column, label]`, 1-based.
    pub entries: Vec<[usize; 3]>,
}

impl From<&StandardTableau> for TableauJson {
    fn from(t: &StandardTableau) -> Self {
        Self {
            shape: ShapeJson {
                outer: partition(t.outer()),
                inner: partition(t.inner()),
            },
            entries: t.entries().map(|(c, l)| [c.row, c.col, l]).collect(),
        }
    }
}

impl TableauJson {
    pub fn to_tableau(&self) -> anyhow::Result<StandardTableau> {
        let inner = parse_partition(&self.shape.inner)?;
        let t = StandardTableau::from_entries(inner, self.entries.iter().map(|&[r, c, l]| (Cell::new(r, c), l)))?;
        anyhow::ensure!(
            t.outer().parts() == self.shape.outer.as_slice(),
            "entries fill {}, not the stated outer shape",
            t.outer()
        );
        Ok(t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectJson {
    pub ell: usize,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryJson {
    pub rect: RectJson,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornersJson {
    pub empty: PartitionJson,
    pub lambda: PartitionJson,
    pub mu: PartitionJson,
    pub nu: PartitionJson,
    #[serde(rename = "lambdaVee")]
    pub lambda_vee: PartitionJson,
    #[serde(rename = "muVee")]
    pub mu_vee: PartitionJson,
    #[serde(rename = "nuVee")]
    pub nu_vee: PartitionJson,
    #[serde(rename = "Lambda")]
    pub full: PartitionJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceJson {
    /// Corner names joined by `-`, e.g. `empty-mu-nuVee-lambda`.
    pub name: String,
    /// Rows as printed, top row first.
    pub rows: Vec<Vec<PartitionJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartonJson {
    pub geometry: GeometryJson,
    pub corners: CornersJson,
    pub witness: TableauJson,
    pub faces: Vec<FaceJson>,
}

impl From<&Carton> for CartonJson {
    fn from(ca: &Carton) -> Self {
        let g = ca.geometry();
        let corner = |c| partition(ca.corner_label(c));
        Self {
            geometry: GeometryJson {
                rect: RectJson {
                    ell: g.rect().ell(),
                    k: g.rect().k(),
                },
                a: g.a(),
                b: g.b(),
                c: g.c(),
            },
            corners: CornersJson {
                empty: corner(Corner::Empty),
                lambda: corner(Corner::Lambda),
                mu: corner(Corner::Mu),
                nu: corner(Corner::Nu),
                lambda_vee: corner(Corner::LambdaVee),
                mu_vee: corner(Corner::MuVee),
                nu_vee: corner(Corner::NuVee),
                full: corner(Corner::Full),
            },
            witness: TableauJson::from(&ca.witness()),
            faces: Face::ALL
                .into_iter()
                .map(|f| FaceJson {
                    name: f.name().to_string(),
                    rows: ca
                        .face_rows(f)
                        .iter()
                        .map(|r| r.iter().map(partition).collect())
                        .collect(),
                })
                .collect(),
        }
    }
}

impl CartonJson {
    /// Rebuilds the carton from its faces; corners and witness must agree.
    pub fn to_carton(&self) -> anyhow::Result<Carton> {
        let g = &self.geometry;
        let rect = Rectangle::new(g.rect.ell, g.rect.k)?;
        let geometry = CartonGeometry::new(rect, g.a, g.b, g.c)?;
        let mut faces = Vec::new();
        for f in &self.faces {
            let face = Face::from_name(&f.name).ok_or_else(|| anyhow::anyhow!("unknown face {:?}", f.name))?;
            let rows = f
                .rows
                .iter()
                .map(|r| r.iter().map(|p| parse_partition(p)).collect::<anyhow::Result<Vec<_>>>())
                .collect::<anyhow::Result<Vec<_>>>()?;
            faces.push((face, rows));
        }
        let ca = Carton::from_face_rows(geometry, &faces)?;
        let again = CartonJson::from(&ca);
        anyhow::ensure!(again.corners == self.corners, "corner labels disagree with the faces");
        anyhow::ensure!(again.witness == self.witness, "witness disagrees with the faces");
        Ok(ca)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthJson {
    /// Rows as printed, top row first.
    pub rows: Vec<Vec<PartitionJson>>,
}

impl From<&GrowthGrid> for GrowthJson {
    fn from(g: &GrowthGrid) -> Self {
        Self {
            rows: g
                .rows()
                .iter()
                .rev()
                .map(|r| r.iter().map(partition).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountJson {
    pub rect: RectJson,
    pub lambda: PartitionJson,
    pub mu: PartitionJson,
    pub nu: PartitionJson,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ballot: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rectification: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteJson {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl From<&SuiteReport> for SuiteJson {
    fn from(s: &SuiteReport) -> Self {
        Self {
            name: s.name.clone(),
            passed: s.passed(),
            cases: s.cases,
            failures: s.failures.iter().filter(|f| !f.is_empty()).cloned().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use carton_core::{canonical_tableaux, enumerate_cartons, SkewShape};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn tableau_schema() {
        let t = StandardTableau::from_rows(&[vec![1, 2], vec![3]]).unwrap();
        let s = serde_json::to_string(&TableauJson::from(&t)).unwrap();
        assert_eq!(s, r#"{"shape":{"outer":[2,1],"inner":[]},"entries":[[1,1,1],[1,2,2],[2,1,3]]}"#);
        let back: TableauJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_tableau().unwrap(), t);
    }

    #[test]
    fn tableau_outer_must_match() {
        let mut j = TableauJson::from(&StandardTableau::superstandard(&SkewShape::straight(p(&[2]))));
        j.shape.outer = vec![3];
        assert!(j.to_tableau().is_err());
    }

    #[test]
    fn carton_round_trip_is_a_fixed_point() {
        let r = Rectangle::new(3, 3).unwrap();
        let ts = canonical_tableaux(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1]));
        for ca in enumerate_cartons(r, &ts[0], &ts[1], &ts[2]).unwrap() {
            let ca = ca.unwrap();
            let text = serde_json::to_string(&CartonJson::from(&ca)).unwrap();
            let parsed: CartonJson = serde_json::from_str(&text).unwrap();
            let rebuilt = parsed.to_carton().unwrap();
            assert_eq!(rebuilt, ca);
            assert_eq!(serde_json::to_string(&CartonJson::from(&rebuilt)).unwrap(), text);
        }
    }

    #[test]
    fn corner_names_in_schema() {
        let r = Rectangle::new(2, 3).unwrap();
        let ts = canonical_tableaux(&p(&[2]), &p(&[2, 1]), &p(&[1]));
        let ca = enumerate_cartons(r, &ts[0], &ts[1], &ts[2]).unwrap().next().unwrap().unwrap();
        let v = serde_json::to_value(CartonJson::from(&ca)).unwrap();
        let corners = v["corners"].as_object().unwrap();
        let names: Vec<&str> = corners.keys().map(|s| s.as_str()).collect();
        for want in ["empty", "lambda", "mu", "nu", "lambdaVee", "muVee", "nuVee", "Lambda"] {
            assert!(names.contains(&want), "{want}");
        }
        assert_eq!(v["corners"]["Lambda"], serde_json::json!([3, 3]));
        assert_eq!(v["faces"][0]["name"], "empty-mu-nuVee-lambda");
    }

    #[test]
    fn tampered_corner_is_rejected() {
        let r = Rectangle::new(2, 3).unwrap();
        let ts = canonical_tableaux(&p(&[2]), &p(&[2, 1]), &p(&[1]));
        let ca = enumerate_cartons(r, &ts[0], &ts[1], &ts[2]).unwrap().next().unwrap().unwrap();
        let mut j = CartonJson::from(&ca);
        j.corners.mu = vec![3];
        assert!(j.to_carton().is_err());
    }
}
