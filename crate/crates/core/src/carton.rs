//! Cartons: partitions on the surface grid of an `|λ| × |μ| × |ν|` box whose
//! every face is a growth diagram.
//!
//! Coordinates: `x` runs along the λ edge (length `a = |λ|`), `y` along the μ
//! edge (`b = |μ|`), `z` along the ν edge (`c = |ν|`). The label at `(x, y, z)`
//! has `x + y + z` cells. The eight corners carry
//!
//! ```text
//! (0,0,0) ∅     (a,0,0) λ     (0,b,0) μ     (0,0,c) ν
//! (a,b,0) ν∨    (a,0,c) μ∨    (0,b,c) λ∨    (a,b,c) Λ
//! ```

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::growth::{self, grow_rectangle};
use crate::jdt::{rectification, tilde};
use crate::shapes::{Partition, Rectangle, SkewShape};
use crate::tableau::{all_syt, ShapeChain, StandardTableau, SytIter};

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

/// A vertex of the box grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

pub type SurfaceVertex = Vertex;

impl Vertex {
    pub const fn new(x: usize, y: usize, z: usize) -> Self {
        Self { x, y, z }
    }

    fn from_coords(c: [usize; 3]) -> Self {
        Self::new(c[X], c[Y], c[Z])
    }

    fn coords(self) -> [usize; 3] {
        [self.x, self.y, self.z]
    }

    pub fn rank(self) -> usize {
        self.x + self.y + self.z
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// The eight named corners of a carton.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    Empty,
    Lambda,
    Mu,
    Nu,
    LambdaVee,
    MuVee,
    NuVee,
    Full,
}

impl Corner {
    pub const ALL: [Corner; 8] = [
        Corner::Empty,
        Corner::Lambda,
        Corner::Mu,
        Corner::Nu,
        Corner::LambdaVee,
        Corner::MuVee,
        Corner::NuVee,
        Corner::Full,
    ];

    /// Serialization name.
    pub fn name(self) -> &'static str {
        match self {
            Corner::Empty => "empty",
            Corner::Lambda => "lambda",
            Corner::Mu => "mu",
            Corner::Nu => "nu",
            Corner::LambdaVee => "lambdaVee",
            Corner::MuVee => "muVee",
            Corner::NuVee => "nuVee",
            Corner::Full => "Lambda",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Corner::Empty => "∅",
            Corner::Lambda => "λ",
            Corner::Mu => "μ",
            Corner::Nu => "ν",
            Corner::LambdaVee => "λ∨",
            Corner::MuVee => "μ∨",
            Corner::NuVee => "ν∨",
            Corner::Full => "Λ",
        }
    }

    /// Which coordinates sit at their maximum.
    fn maxed(self) -> [bool; 3] {
        match self {
            Corner::Empty => [false, false, false],
            Corner::Lambda => [true, false, false],
            Corner::Mu => [false, true, false],
            Corner::Nu => [false, false, true],
            Corner::NuVee => [true, true, false],
            Corner::MuVee => [true, false, true],
            Corner::LambdaVee => [false, true, true],
            Corner::Full => [true, true, true],
        }
    }
}

/// The six faces of the box, named by the coordinate they fix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    /// `z = 0`: ∅−μ−ν∨−λ
    ZMin,
    /// `x = a`: λ−μ∨−Λ−ν∨
    XMax,
    /// `y = 0`: ∅−ν−μ∨−λ
    YMin,
    /// `z = c`: ν−λ∨−Λ−μ∨
    ZMax,
    /// `y = b`: λ∨−Λ−ν∨−μ
    YMax,
    /// `x = 0`: ∅−ν−λ∨−μ
    XMin,
}

/// How a face is printed: rows run down the `row_axis` from its maximum,
/// columns run along `col_axis` (descending when `col_desc`).
#[derive(Clone, Copy, Debug)]
pub struct FaceLayout {
    pub fixed_axis: usize,
    pub fixed_at_max: bool,
    pub row_axis: usize,
    pub col_axis: usize,
    pub col_desc: bool,
}

impl Face {
    pub const ALL: [Face; 6] = [Face::ZMin, Face::XMax, Face::YMin, Face::ZMax, Face::YMax, Face::XMin];

    pub fn caption(self) -> &'static str {
        match self {
            Face::ZMin => "∅−μ−ν∨−λ",
            Face::XMax => "λ−μ∨−Λ−ν∨",
            Face::YMin => "∅−ν−μ∨−λ",
            Face::ZMax => "ν−λ∨−Λ−μ∨",
            Face::YMax => "λ∨−Λ−ν∨−μ",
            Face::XMin => "∅−ν−λ∨−μ",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Face::ZMin => "empty-mu-nuVee-lambda",
            Face::XMax => "lambda-muVee-Lambda-nuVee",
            Face::YMin => "empty-nu-muVee-lambda",
            Face::ZMax => "nu-lambdaVee-Lambda-muVee",
            Face::YMax => "lambdaVee-Lambda-nuVee-mu",
            Face::XMin => "empty-nu-lambdaVee-mu",
        }
    }

    pub fn from_name(name: &str) -> Option<Face> {
        Face::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn layout(self) -> FaceLayout {
        let (fixed_axis, fixed_at_max, row_axis, col_axis, col_desc) = match self {
            Face::ZMin => (Z, false, X, Y, false),
            Face::XMax => (X, true, Z, Y, false),
            Face::YMin => (Y, false, X, Z, true),
            Face::ZMax => (Z, true, X, Y, false),
            Face::YMax => (Y, true, X, Z, true),
            Face::XMin => (X, false, Z, Y, false),
        };
        FaceLayout {
            fixed_axis,
            fixed_at_max,
            row_axis,
            col_axis,
            col_desc,
        }
    }
}

/// The box: rectangle `Λ` and edge lengths `a = |λ|`, `b = |μ|`, `c = |ν|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartonGeometry {
    rect: Rectangle,
    dims: [usize; 3],
}

impl CartonGeometry {
    pub fn new(rect: Rectangle, a: usize, b: usize, c: usize) -> Result<Self> {
        if a + b + c != rect.area() {
            return Err(Error::InvalidCarton(format!(
                "edge lengths {a}+{b}+{c} do not add up to the area of {rect}"
            )));
        }
        Ok(Self { rect, dims: [a, b, c] })
    }

    pub fn rect(&self) -> Rectangle {
        self.rect
    }

    pub fn a(&self) -> usize {
        self.dims[X]
    }

    pub fn b(&self) -> usize {
        self.dims[Y]
    }

    pub fn c(&self) -> usize {
        self.dims[Z]
    }

    fn len(&self) -> usize {
        self.dims.iter().map(|d| d + 1).product()
    }

    fn index(&self, v: Vertex) -> usize {
        (v.x * (self.dims[Y] + 1) + v.y) * (self.dims[Z] + 1) + v.z
    }

    fn vertex(&self, idx: usize) -> Vertex {
        let z = idx % (self.dims[Z] + 1);
        let rest = idx / (self.dims[Z] + 1);
        Vertex::new(rest / (self.dims[Y] + 1), rest % (self.dims[Y] + 1), z)
    }

    fn extreme(&self, axis: usize, value: usize) -> bool {
        value == 0 || value == self.dims[axis]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.x <= self.dims[X] && v.y <= self.dims[Y] && v.z <= self.dims[Z]
    }

    pub fn is_surface(&self, v: Vertex) -> bool {
        self.contains(v) && v.coords().iter().enumerate().any(|(ax, &val)| self.extreme(ax, val))
    }

    pub fn surface_vertices(&self) -> Vec<Vertex> {
        (0..self.len()).map(|i| self.vertex(i)).filter(|&v| self.is_surface(v)).collect()
    }

    pub fn corner(&self, corner: Corner) -> Vertex {
        let m = corner.maxed();
        Vertex::from_coords([0, 1, 2].map(|ax| if m[ax] { self.dims[ax] } else { 0 }))
    }

    pub fn corner_at(&self, v: Vertex) -> Option<Corner> {
        Corner::ALL.into_iter().find(|&c| self.corner(c) == v)
    }

    /// Surface edges as `(lower, upper)` vertex pairs.
    pub fn surface_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for v in self.surface_vertices() {
            let c = v.coords();
            for ax in 0..3 {
                if c[ax] == self.dims[ax] {
                    continue;
                }
                let others_extreme = (0..3).filter(|&o| o != ax).any(|o| self.extreme(o, c[o]));
                if others_extreme {
                    let mut n = c;
                    n[ax] += 1;
                    out.push((v, Vertex::from_coords(n)));
                }
            }
        }
        out
    }

    /// Every unit square on the surface as `[min, mid, mid, max]`.
    pub fn face_squares(&self) -> Vec<[Vertex; 4]> {
        let mut seen = BTreeSet::new();
        for face in Face::ALL {
            let l = face.layout();
            let fixed = if l.fixed_at_max { self.dims[l.fixed_axis] } else { 0 };
            let (u, w) = (l.row_axis, l.col_axis);
            for s in 0..self.dims[u] {
                for t in 0..self.dims[w] {
                    let at = |ds: usize, dt: usize| {
                        let mut c = [0; 3];
                        c[l.fixed_axis] = fixed;
                        c[u] = s + ds;
                        c[w] = t + dt;
                        Vertex::from_coords(c)
                    };
                    seen.insert([at(0, 0), at(1, 0), at(0, 1), at(1, 1)]);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Vertices of a face in printed orientation (top row first).
    pub fn face_vertices(&self, face: Face) -> Vec<Vec<Vertex>> {
        let l = face.layout();
        let fixed = if l.fixed_at_max { self.dims[l.fixed_axis] } else { 0 };
        let (rows, cols) = (self.dims[l.row_axis], self.dims[l.col_axis]);
        (0..=rows)
            .map(|r| {
                (0..=cols)
                    .map(|q| {
                        let mut c = [0; 3];
                        c[l.fixed_axis] = fixed;
                        c[l.row_axis] = rows - r;
                        c[l.col_axis] = if l.col_desc { cols - q } else { q };
                        Vertex::from_coords(c)
                    })
                    .collect()
            })
            .collect()
    }

    /// Vertices `start, start + e, …, start + len·e` along `axis`.
    fn line(&self, start: Vertex, axis: usize, len: usize) -> Vec<Vertex> {
        (0..=len)
            .map(|i| {
                let mut c = start.coords();
                c[axis] += i;
                Vertex::from_coords(c)
            })
            .collect()
    }

    fn edge_name(&self, v: Vertex) -> &'static str {
        let c = v.coords();
        let at = |ax: usize| -> Option<bool> {
            if c[ax] == 0 && self.dims[ax] > 0 {
                Some(false)
            } else if c[ax] == self.dims[ax] {
                Some(true)
            } else {
                None
            }
        };
        match (at(X), at(Y), at(Z)) {
            (None, Some(false), Some(false)) => "∅−λ",
            (Some(false), None, Some(false)) => "∅−μ",
            (Some(false), Some(false), None) => "∅−ν",
            (Some(true), None, Some(false)) => "λ−ν∨",
            (Some(true), Some(false), None) => "λ−μ∨",
            (None, Some(true), Some(false)) => "μ−ν∨",
            (Some(false), Some(true), None) => "μ−λ∨",
            (None, Some(false), Some(true)) => "ν−μ∨",
            (Some(false), None, Some(true)) => "ν−λ∨",
            (None, Some(true), Some(true)) => "λ∨−Λ",
            (Some(true), None, Some(true)) => "μ∨−Λ",
            (Some(true), Some(true), None) => "ν∨−Λ",
            (None, None, _) | (None, _, None) | (_, None, None) => "face interior",
            _ => "corner",
        }
    }
}

/// Partial assignment of labels to the surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Surface {
    geometry: CartonGeometry,
    labels: Vec<Option<Partition>>,
}

impl Surface {
    fn new(geometry: CartonGeometry) -> Self {
        Self {
            geometry,
            labels: vec![None; geometry.len()],
        }
    }

    fn get(&self, v: Vertex) -> Option<&Partition> {
        self.labels[self.geometry.index(v)].as_ref()
    }

    fn put_line(&mut self, start: Vertex, axis: usize, chain: &ShapeChain) {
        let g = self.geometry;
        for (v, p) in g.line(start, axis, chain.steps()).into_iter().zip(chain.shapes()) {
            self.labels[g.index(v)] = Some(p.clone());
        }
    }

    fn read_line(&self, start: Vertex, axis: usize, len: usize) -> Option<ShapeChain> {
        let shapes = self
            .geometry
            .line(start, axis, len)
            .into_iter()
            .map(|v| self.get(v).cloned())
            .collect::<Option<Vec<_>>>()?;
        ShapeChain::new(shapes).ok()
    }
}

/// Carton with only the initial data filled in: the ∅ and Λ corners, the
/// three edges leaving ∅, the derived corners λ∨, μ∨, ν∨ and the three edges
/// into Λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialCarton {
    surface: Surface,
    tableaux: [StandardTableau; 3],
    tildes: [StandardTableau; 3],
}

impl PartialCarton {
    pub fn geometry(&self) -> CartonGeometry {
        self.surface.geometry
    }

    pub fn label(&self, v: Vertex) -> Option<&Partition> {
        self.surface.get(v)
    }

    pub fn t_lambda(&self) -> &StandardTableau {
        &self.tableaux[X]
    }

    pub fn t_mu(&self) -> &StandardTableau {
        &self.tableaux[Y]
    }

    pub fn t_nu(&self) -> &StandardTableau {
        &self.tableaux[Z]
    }

    /// `T̃_λ, T̃_μ, T̃_ν`.
    pub fn tildes(&self) -> &[StandardTableau; 3] {
        &self.tildes
    }
}

/// A complete carton filling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Carton {
    geometry: CartonGeometry,
    labels: Vec<Option<Partition>>,
}

impl Carton {
    fn from_surface(s: Surface) -> Result<Self> {
        let g = s.geometry;
        for v in g.surface_vertices() {
            if s.get(v).is_none() {
                return Err(Error::InvalidCarton(format!("vertex {v} is unlabelled")));
            }
        }
        Ok(Self {
            geometry: g,
            labels: s.labels,
        })
    }

    /// Assembles a carton from face grids given in printed orientation.
    /// Shared edges must agree; local rules are not checked here.
    pub fn from_face_rows(geometry: CartonGeometry, faces: &[(Face, Vec<Vec<Partition>>)]) -> Result<Self> {
        let mut s = Surface::new(geometry);
        for (face, rows) in faces {
            let verts = geometry.face_vertices(*face);
            if rows.len() != verts.len() || rows.iter().zip(&verts).any(|(r, v)| r.len() != v.len()) {
                return Err(Error::InvalidCarton(format!("face {} has the wrong dimensions", face.caption())));
            }
            for (vr, pr) in verts.iter().zip(rows) {
                for (&v, p) in vr.iter().zip(pr) {
                    let slot = &mut s.labels[geometry.index(v)];
                    match slot {
                        Some(q) if q != p => {
                            return Err(Error::InvalidCarton(format!(
                                "face {} puts {p} at {v}, which already carries {q}",
                                face.caption()
                            )))
                        }
                        _ => *slot = Some(p.clone()),
                    }
                }
            }
        }
        Self::from_surface(s)
    }

    pub fn geometry(&self) -> CartonGeometry {
        self.geometry
    }

    pub fn label(&self, v: Vertex) -> &Partition {
        self.labels[self.geometry.index(v)]
            .as_ref()
            .unwrap_or_else(|| panic!("{v} is not a surface vertex"))
    }

    pub fn corner_label(&self, corner: Corner) -> &Partition {
        self.label(self.geometry.corner(corner))
    }

    /// Labels of a face in printed orientation.
    pub fn face_rows(&self, face: Face) -> Vec<Vec<Partition>> {
        self.geometry
            .face_vertices(face)
            .into_iter()
            .map(|r| r.into_iter().map(|v| self.label(v).clone()).collect())
            .collect()
    }

    /// `(vertex, label)` over the surface in index order.
    pub fn labels(&self) -> impl Iterator<Item = (Vertex, &Partition)> + '_ {
        self.labels
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.as_ref().map(|p| (self.geometry.vertex(i), p)))
    }

    fn chain(&self, from: Corner, axis: usize) -> ShapeChain {
        let g = self.geometry;
        let shapes = g
            .line(g.corner(from), axis, g.dims[axis])
            .into_iter()
            .map(|v| self.label(v).clone())
            .collect();
        ShapeChain::new_unchecked(shapes)
    }

    pub fn t_lambda(&self) -> StandardTableau {
        self.chain(Corner::Empty, X).to_tableau()
    }

    pub fn t_mu(&self) -> StandardTableau {
        self.chain(Corner::Empty, Y).to_tableau()
    }

    pub fn t_nu(&self) -> StandardTableau {
        self.chain(Corner::Empty, Z).to_tableau()
    }

    /// The λ−ν∨ edge, a tableau of shape ν∨/λ rectifying to `T_μ`.
    pub fn witness(&self) -> StandardTableau {
        self.chain(Corner::Lambda, Y).to_tableau()
    }

    /// Edges into Λ: `λ∨−Λ`, `μ∨−Λ`, `ν∨−Λ` as tableaux.
    pub fn far_edges(&self) -> [StandardTableau; 3] {
        [
            self.chain(Corner::LambdaVee, X).to_tableau(),
            self.chain(Corner::MuVee, Y).to_tableau(),
            self.chain(Corner::NuVee, Z).to_tableau(),
        ]
    }

    /// The tableau read along the edge leaving `from` in direction `axis`
    /// (0 = λ, 1 = μ, 2 = ν).
    pub fn edge_tableau(&self, from: Corner, axis: usize) -> StandardTableau {
        self.chain(from, axis).to_tableau()
    }
}

/// `T_{ν∨/λ}` rectifying to `T_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness(StandardTableau);

impl Witness {
    pub fn new(tableau: StandardTableau, t_mu: &StandardTableau) -> Result<Self> {
        if &rectification(&tableau) != t_mu {
            return Err(Error::InvalidTableau(format!("{tableau} does not rectify to {t_mu}")));
        }
        Ok(Self(tableau))
    }

    pub fn tableau(&self) -> &StandardTableau {
        &self.0
    }
}

fn check_straight_fit(t: &StandardTableau, rect: Rectangle) -> Result<()> {
    if !t.is_straight() {
        return Err(Error::NotStraight(t.shape().to_string()));
    }
    t.outer().check_fits(rect)
}

/// Places the initial data. `Ok(None)` signals that no carton can exist
/// because `|λ| + |μ| + |ν| ≠ ℓk`.
pub fn carton_init(
    rect: Rectangle,
    t_lambda: &StandardTableau,
    t_mu: &StandardTableau,
    t_nu: &StandardTableau,
) -> Result<Option<PartialCarton>> {
    for t in [t_lambda, t_mu, t_nu] {
        check_straight_fit(t, rect)?;
    }
    let Ok(geometry) = CartonGeometry::new(rect, t_lambda.size(), t_mu.size(), t_nu.size()) else {
        return Ok(None);
    };
    let tableaux = [t_lambda.clone(), t_mu.clone(), t_nu.clone()];
    let tildes = [tilde(t_lambda, rect)?, tilde(t_mu, rect)?, tilde(t_nu, rect)?];

    let mut s = Surface::new(geometry);
    for ax in [X, Y, Z] {
        s.put_line(geometry.corner(Corner::Empty), ax, &tableaux[ax].to_chain());
    }
    s.put_line(geometry.corner(Corner::LambdaVee), X, &tildes[X].to_chain());
    s.put_line(geometry.corner(Corner::MuVee), Y, &tildes[Y].to_chain());
    s.put_line(geometry.corner(Corner::NuVee), Z, &tildes[Z].to_chain());
    Ok(Some(PartialCarton {
        surface: s,
        tableaux,
        tildes,
    }))
}

/// Grows one face and writes it into the surface, reporting any disagreement
/// with labels already present.
fn grow_face(
    s: &mut Surface,
    face: &'static str,
    origin: Vertex,
    left_axis: usize,
    top_axis: usize,
) -> Result<()> {
    let g = s.geometry;
    let (m, n) = (g.dims[left_axis], g.dims[top_axis]);
    let missing = |what: &str| Error::Consistency {
        face,
        edge: g.edge_name(origin),
        detail: format!("{what} boundary is not known yet"),
    };
    let left = s.read_line(origin, left_axis, m).ok_or_else(|| missing("left"))?;
    let mut corner = origin.coords();
    corner[left_axis] += m;
    let top = s
        .read_line(Vertex::from_coords(corner), top_axis, n)
        .ok_or_else(|| missing("top"))?;
    let grid = grow_rectangle(&left, &top)?;
    for i in 0..=m {
        for j in 0..=n {
            let mut c = origin.coords();
            c[left_axis] += i;
            c[top_axis] += j;
            let v = Vertex::from_coords(c);
            let p = grid.get(i, j);
            let slot = &mut s.labels[g.index(v)];
            match slot {
                Some(q) if q != p => {
                    return Err(Error::Consistency {
                        face,
                        edge: g.edge_name(v),
                        detail: format!("derived {p} at {v}, expected {q}"),
                    })
                }
                _ => *slot = Some(p.clone()),
            }
        }
    }
    Ok(())
}

/// Extends the face ∅−μ−ν∨−λ determined by a witness to the whole carton,
/// growing the faces in the order of the uniqueness argument. Every derived
/// edge that is already known (`T_μ`, `T̃_μ`, `T_ν`, `T̃_λ`, and the μ−λ∨
/// edge from two sides) is compared against the new value; a mismatch is a
/// bug and is reported as [`Error::Consistency`].
pub fn extend_witness(p: &PartialCarton, w: &Witness) -> Result<Carton> {
    let g = p.geometry();
    let t = w.tableau();
    if t.inner() != p.t_lambda().outer() || t.outer() != p.label(g.corner(Corner::NuVee)).unwrap() {
        return Err(Error::ShapeMismatch(format!(
            "witness shape {} is not ν∨/λ = {}/{}",
            t.shape(),
            p.label(g.corner(Corner::NuVee)).unwrap(),
            p.t_lambda().outer()
        )));
    }
    let mut s = p.surface.clone();
    s.put_line(g.corner(Corner::Lambda), Y, &t.to_chain());
    let o = |c| g.corner(c);
    grow_face(&mut s, "∅−μ−ν∨−λ", o(Corner::Empty), X, Y)?;
    grow_face(&mut s, "λ−μ∨−Λ−ν∨", o(Corner::Lambda), Y, Z)?;
    grow_face(&mut s, "∅−ν−μ∨−λ", o(Corner::Empty), X, Z)?;
    grow_face(&mut s, "ν−λ∨−Λ−μ∨", o(Corner::Nu), X, Y)?;
    grow_face(&mut s, "λ∨−Λ−ν∨−μ", o(Corner::Mu), X, Z)?;
    grow_face(&mut s, "∅−ν−λ∨−μ", o(Corner::Empty), Z, Y)?;
    Carton::from_surface(s)
}

/// Standard tableaux of shape ν∨/λ rectifying to `T_μ`, in [`all_syt`] order.
pub struct Witnesses {
    inner: Option<SytIter>,
    t_mu: StandardTableau,
}

impl Iterator for Witnesses {
    type Item = Witness;

    fn next(&mut self) -> Option<Witness> {
        let it = self.inner.as_mut()?;
        it.by_ref()
            .find(|t| rectification(t) == self.t_mu)
            .map(Witness)
    }
}

pub fn witnesses(p: &PartialCarton) -> Witnesses {
    let g = p.geometry();
    let nu_vee = p.label(g.corner(Corner::NuVee)).unwrap().clone();
    let inner = SkewShape::new(nu_vee, p.t_lambda().outer().clone())
        .ok()
        .map(|shape| all_syt(&shape));
    Witnesses {
        inner,
        t_mu: p.t_mu().clone(),
    }
}

/// Stream of cartons, one per witness.
pub struct Cartons {
    init: Option<(PartialCarton, Witnesses)>,
}

impl Iterator for Cartons {
    type Item = Result<Carton>;

    fn next(&mut self) -> Option<Result<Carton>> {
        let (p, ws) = self.init.as_mut()?;
        let w = ws.next()?;
        Some(extend_witness(p, &w))
    }
}

/// Every carton with the given edge tableaux; the count is `C_{λ,μ,ν}`.
pub fn enumerate_cartons(
    rect: Rectangle,
    t_lambda: &StandardTableau,
    t_mu: &StandardTableau,
    t_nu: &StandardTableau,
) -> Result<Cartons> {
    let init = carton_init(rect, t_lambda, t_mu, t_nu)?.map(|p| {
        let ws = witnesses(&p);
        (p, ws)
    });
    Ok(Cartons { init })
}

/// As [`enumerate_cartons`], extending witnesses on the rayon pool. The
/// output order is the same.
pub fn enumerate_cartons_par(
    rect: Rectangle,
    t_lambda: &StandardTableau,
    t_mu: &StandardTableau,
    t_nu: &StandardTableau,
) -> Result<Vec<Carton>> {
    let Some(p) = carton_init(rect, t_lambda, t_mu, t_nu)? else {
        return Ok(Vec::new());
    };
    let g = p.geometry();
    let nu_vee = p.label(g.corner(Corner::NuVee)).unwrap().clone();
    let Ok(shape) = SkewShape::new(nu_vee, p.t_lambda().outer().clone()) else {
        return Ok(Vec::new());
    };
    let candidates: Vec<StandardTableau> = all_syt(&shape).collect();
    candidates
        .into_par_iter()
        .filter(|t| &rectification(t) == p.t_mu())
        .map(|t| extend_witness(&p, &Witness(t)))
        .collect()
}

/// Row superstandard tableaux of the three shapes.
pub fn canonical_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> [StandardTableau; 3] {
    [lambda, mu, nu].map(|p| StandardTableau::superstandard(&SkewShape::straight(p.clone())))
}

/// `#CARTONS_{λ,μ,ν}` with the given (or row superstandard) edge tableaux.
pub fn count(
    rect: Rectangle,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    tableaux: Option<&[StandardTableau; 3]>,
) -> Result<u64> {
    for p in [lambda, mu, nu] {
        p.check_fits(rect)?;
    }
    let canonical;
    let ts = match tableaux {
        Some(ts) => {
            for (t, p) in ts.iter().zip([lambda, mu, nu]) {
                if !t.is_straight() || t.outer() != p {
                    return Err(Error::ShapeMismatch(format!("tableau {t} does not have shape {p}")));
                }
            }
            ts
        }
        None => {
            canonical = canonical_tableaux(lambda, mu, nu);
            &canonical
        }
    };
    let mut n = 0;
    for c in enumerate_cartons(rect, &ts[0], &ts[1], &ts[2])? {
        c?;
        n += 1;
    }
    Ok(n)
}

// ---------------------------------------------------------------------------
// Generic constraint search

struct Search {
    geometry: CartonGeometry,
    full: Partition,
    squares: Vec<[usize; 4]>,
    vertex_squares: Vec<Vec<usize>>,
    // (neighbour, neighbour is the larger end)
    neighbours: Vec<Vec<(usize, bool)>>,
    surface: Vec<usize>,
    found: Vec<Carton>,
}

type State = Vec<Option<Partition>>;

impl Search {
    fn new(geometry: CartonGeometry) -> Self {
        let n = geometry.len();
        let squares: Vec<[usize; 4]> = geometry
            .face_squares()
            .into_iter()
            .map(|sq| sq.map(|v| geometry.index(v)))
            .collect();
        let mut vertex_squares = vec![Vec::new(); n];
        for (i, sq) in squares.iter().enumerate() {
            for &v in sq {
                vertex_squares[v].push(i);
            }
        }
        let mut neighbours = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for (lo, hi) in geometry.surface_edges() {
            let (lo, hi) = (geometry.index(lo), geometry.index(hi));
            if seen.insert((lo, hi)) {
                neighbours[lo].push((hi, true));
                neighbours[hi].push((lo, false));
            }
        }
        let surface = geometry
            .surface_vertices()
            .into_iter()
            .map(|v| geometry.index(v))
            .collect();
        Self {
            geometry,
            full: geometry.rect.full(),
            squares,
            vertex_squares,
            neighbours,
            surface,
            found: Vec::new(),
        }
    }

    fn consistent(&self, state: &State, v: usize, p: &Partition) -> bool {
        if p.size() != self.geometry.vertex(v).rank() || !self.full.contains(p) {
            return false;
        }
        self.neighbours[v].iter().all(|&(u, larger)| match &state[u] {
            Some(q) if larger => q.covers(p),
            Some(q) => p.covers(q),
            None => true,
        })
    }

    fn assign(&self, state: &mut State, v: usize, p: Partition, queue: &mut VecDeque<usize>) -> bool {
        if let Some(q) = &state[v] {
            return *q == p;
        }
        if !self.consistent(state, v, &p) {
            return false;
        }
        state[v] = Some(p);
        queue.extend(self.vertex_squares[v].iter().copied());
        true
    }

    fn propagate(&self, state: &mut State, queue: &mut VecDeque<usize>) -> bool {
        while let Some(sq) = queue.pop_front() {
            let [g, a, d, b] = self.squares[sq];
            let known = |i: usize| state[i].clone();
            match (known(g), known(a), known(d), known(b)) {
                (Some(pg), Some(pa), Some(pd), Some(pb)) => {
                    if growth::local_rule_forward(&pg, &pa, &pb).ok() != Some(pd) {
                        return false;
                    }
                }
                (Some(pg), Some(pa), None, Some(pb)) => match growth::local_rule_forward(&pg, &pa, &pb) {
                    Ok(x) if self.assign(state, d, x.clone(), queue) => {}
                    _ => return false,
                },
                (Some(pg), None, Some(pd), Some(pb)) => match growth::local_rule_forward(&pg, &pd, &pb) {
                    Ok(x) if self.assign(state, a, x.clone(), queue) => {}
                    _ => return false,
                },
                (None, Some(pa), Some(pd), Some(pb)) => {
                    let mut c = growth::local_rule_inverse_candidates(&pa, &pb, &pd);
                    match c.len() {
                        0 => return false,
                        1
                            if !self.assign(state, g, c.pop().unwrap(), queue) => {
                                return false;
                            }
                        _ => {}
                    }
                }
                (Some(pg), Some(pa), Some(pd), None) => {
                    let mut c = growth::local_rule_join_candidates(&pg, &pa, &pd);
                    match c.len() {
                        0 => return false,
                        1
                            if !self.assign(state, b, c.pop().unwrap(), queue) => {
                                return false;
                            }
                        _ => {}
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn candidates(&self, state: &State, v: usize) -> Option<Vec<Partition>> {
        let mut below = None;
        let mut above = None;
        for &(u, larger) in &self.neighbours[v] {
            if let Some(q) = &state[u] {
                if larger {
                    above.get_or_insert(q);
                } else {
                    below.get_or_insert(q);
                }
            }
        }
        let raw: Vec<Partition> = match (below, above) {
            (Some(q), _) => q.addable_cells().into_iter().map(|c| q.add_unchecked(c)).collect(),
            (None, Some(q)) => q.removable_cells().into_iter().map(|c| q.remove_unchecked(c)).collect(),
            (None, None) => return None,
        };
        Some(raw.into_iter().filter(|p| self.consistent(state, v, p)).collect())
    }

    fn run(&mut self, mut state: State) {
        // fail-first: branch on the frontier vertex with fewest options
        let mut best: Option<(usize, Vec<Partition>)> = None;
        for &v in &self.surface {
            if state[v].is_some() {
                continue;
            }
            if let Some(c) = self.candidates(&state, v) {
                if best.as_ref().is_none_or(|(_, b)| c.len() < b.len()) {
                    let done = c.len() <= 1;
                    best = Some((v, c));
                    if done {
                        break;
                    }
                }
            }
        }
        let Some((v, options)) = best else {
            if self.surface.iter().all(|&v| state[v].is_some()) {
                let s = Surface {
                    geometry: self.geometry,
                    labels: std::mem::take(&mut state),
                };
                self.found.push(Carton::from_surface(s).expect("all surface vertices labelled"));
            }
            return;
        };
        for p in options {
            let mut next = state.clone();
            let mut queue = VecDeque::new();
            if self.assign(&mut next, v, p, &mut queue) && self.propagate(&mut next, &mut queue) {
                self.run(next);
            }
        }
    }
}

/// Independent enumerator: starting from only ∅, Λ and the three edges
/// leaving ∅, propagates forced squares and branches on the remaining
/// freedom. Produces the same carton set as [`enumerate_cartons`], sorted.
pub fn enumerate_cartons_generic(
    rect: Rectangle,
    t_lambda: &StandardTableau,
    t_mu: &StandardTableau,
    t_nu: &StandardTableau,
) -> Result<Vec<Carton>> {
    for t in [t_lambda, t_mu, t_nu] {
        check_straight_fit(t, rect)?;
    }
    let Ok(geometry) = CartonGeometry::new(rect, t_lambda.size(), t_mu.size(), t_nu.size()) else {
        return Ok(Vec::new());
    };
    let mut search = Search::new(geometry);
    let mut state: State = vec![None; geometry.len()];
    let mut queue = VecDeque::new();
    let mut ok = search.assign(&mut state, geometry.index(geometry.corner(Corner::Full)), rect.full(), &mut queue);
    for (ax, t) in [t_lambda, t_mu, t_nu].into_iter().enumerate() {
        let line = geometry.line(geometry.corner(Corner::Empty), ax, geometry.dims[ax]);
        for (v, p) in line.into_iter().zip(t.to_chain().shapes()) {
            ok &= search.assign(&mut state, geometry.index(v), p.clone(), &mut queue);
        }
    }
    if ok && search.propagate(&mut state, &mut queue) {
        search.run(state);
    }
    let mut found = search.found;
    found.sort();
    Ok(found)
}

// ---------------------------------------------------------------------------
// Validation

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[String] {
        &self.violations
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        f.write_str(&self.violations.join("; "))
    }
}

/// Checks sizes, covers on every surface edge, the local rule on every face
/// square, the eight corner labels and the three edges into Λ.
pub fn validate_carton(ca: &Carton) -> ValidationReport {
    let g = ca.geometry;
    let rect = g.rect;
    let mut bad = Vec::new();
    for (v, p) in ca.labels() {
        if p.size() != v.rank() {
            bad.push(format!("{v}: {p} has {} cells, expected {}", p.size(), v.rank()));
        }
        if !p.fits(rect) {
            bad.push(format!("{v}: {p} does not fit in {rect}"));
        }
    }
    for (lo, hi) in g.surface_edges() {
        if !ca.label(hi).covers(ca.label(lo)) {
            bad.push(format!("edge {lo}−{hi}: {} does not cover {}", ca.label(hi), ca.label(lo)));
        }
    }
    for [lo, a, d, hi] in g.face_squares() {
        let got = growth::local_rule_forward(ca.label(lo), ca.label(a), ca.label(hi));
        if got.as_ref().ok() != Some(ca.label(d)) {
            bad.push(format!("square {lo}..{hi}: local rule fails at {d}"));
        }
    }
    if !bad.is_empty() {
        return ValidationReport { violations: bad };
    }

    if !ca.corner_label(Corner::Empty).is_empty() {
        bad.push("corner ∅ is not empty".into());
    }
    if ca.corner_label(Corner::Full) != &rect.full() {
        bad.push(format!("corner Λ is {}", ca.corner_label(Corner::Full)));
    }
    let pairs = [
        (Corner::Lambda, Corner::LambdaVee),
        (Corner::Mu, Corner::MuVee),
        (Corner::Nu, Corner::NuVee),
    ];
    for (c, vee) in pairs {
        let want = ca.corner_label(c).complement(rect).expect("labels fit");
        if ca.corner_label(vee) != &want {
            bad.push(format!("corner {} is {}, expected {want}", vee.symbol(), ca.corner_label(vee)));
        }
    }
    if bad.is_empty() {
        let edges = [ca.t_lambda(), ca.t_mu(), ca.t_nu()];
        for ((t, far), name) in edges.iter().zip(ca.far_edges()).zip(["λ∨−Λ", "μ∨−Λ", "ν∨−Λ"]) {
            match tilde(t, rect) {
                Ok(want) if want == far => {}
                _ => bad.push(format!("edge {name} is not the rotated evacuation of its source tableau")),
            }
        }
    }
    ValidationReport { violations: bad }
}

// ---------------------------------------------------------------------------
// S3 action

/// A permutation of `(λ, μ, ν)`: position `i` of the new triple holds entry
/// `self.0[i]` of the old one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation([usize; 3]);

impl Permutation {
    pub fn new(images: [usize; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &i in &images {
            if i > 2 || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse(format!("{images:?} is not a permutation of 0,1,2")));
            }
        }
        Ok(Self(images))
    }

    pub const fn identity() -> Self {
        Self([0, 1, 2])
    }

    pub fn all() -> [Permutation; 6] {
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]].map(Permutation)
    }

    pub fn images(&self) -> [usize; 3] {
        self.0
    }

    pub fn apply<T: Clone>(&self, triple: &[T; 3]) -> [T; 3] {
        self.0.map(|i| triple[i].clone())
    }

    /// `self` after `first`: `then.apply(first.apply(t)) = first.then(then).apply(t)`.
    pub fn then(&self, then: &Permutation) -> Permutation {
        Permutation(then.0.map(|i| self.0[i]))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = [0; 3];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &i in &self.0 {
            f.write_str(["l", "m", "n"][i])?;
        }
        Ok(())
    }
}

/// Parses a word such as `mln` naming which of λ (`l`), μ (`m`), ν (`n`)
/// goes in each position; `id` is the identity.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "id" {
            return Ok(Self::identity());
        }
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != 3 {
            return Err(Error::Parse(format!("expected a word like mln, got {s:?}")));
        }
        let mut images = [0; 3];
        for (i, ch) in chars.iter().enumerate() {
            images[i] = match ch {
                'l' => 0,
                'm' => 1,
                'n' => 2,
                _ => return Err(Error::Parse(format!("unknown letter {ch:?} in {s:?}"))),
            };
        }
        Permutation::new(images)
    }
}

/// Applies the symmetry of the box fixing ∅ and Λ that permutes its axes.
/// The result is a carton for the permuted triple.
pub fn permute_carton(ca: &Carton, sigma: Permutation) -> Result<Carton> {
    let report = validate_carton(ca);
    if !report.is_valid() {
        return Err(Error::InvalidCarton(report.to_string()));
    }
    let g = ca.geometry;
    let dims = sigma.apply(&g.dims);
    let ng = CartonGeometry::new(g.rect, dims[X], dims[Y], dims[Z])?;
    let mut s = Surface::new(ng);
    for (v, p) in ca.labels() {
        let c = v.coords();
        let nv = Vertex::from_coords(sigma.0.map(|i| c[i]));
        s.labels[ng.index(nv)] = Some(p.clone());
    }
    Carton::from_surface(s)
}
