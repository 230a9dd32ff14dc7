use std::time::Instant;

use super::{CheckOutcome, Params, Status, Value, Witness};
use crate::depth::{depth_ideal_with, DepthOptions, DEFAULT_VAR_CAP};
use crate::error::HarnessError;
use crate::graph::{named, Graph, StarPackingWitness, VertexSet};
use crate::homology::FieldChoice;
use crate::ideal::{symbolic_square_edge_ideal, Monomial, MonomialIdeal};

/// Per-graph data shared by all checks on that graph.
pub(super) struct Ctx<'a> {
    g: &'a Graph,
    graph_id: String,
    packing: StarPackingWitness,
    var_cap: usize,
}

impl CheckOutcome {
    pub(super) fn not_applicable(check_id: &str, g: &Graph, why: &str) -> CheckOutcome {
        CheckOutcome {
            check_id: check_id.to_string(),
            graph_id: g.to_graph6(),
            status: Status::NotApplicable,
            lhs: None,
            rhs: None,
            params: Params::default(),
            witness: Some(Witness {
                note: Some(why.to_string()),
                ..Witness::default()
            }),
            sampled: false,
            field_char: None,
            elapsed_ms: 0.0,
        }
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// A generator of one ideal that the other ideal does not contain.
fn first_difference(a: &MonomialIdeal, b: &MonomialIdeal) -> Option<String> {
    let names = a.ambient().clone();
    a.gens()
        .iter()
        .find(|g| !b.contains(g))
        .or_else(|| b.gens().iter().find(|g| !a.contains(g)))
        .map(|g| g.display(&names).to_string())
}

fn ideal_value(i: &MonomialIdeal) -> Value {
    Value::Ideal(i.to_string())
}

impl<'a> Ctx<'a> {
    pub(super) fn new(g: &'a Graph, var_cap: usize) -> Self {
        Ctx {
            g,
            graph_id: g.to_graph6(),
            packing: g.star_packing_number(),
            var_cap,
        }
    }

    fn alpha2(&self) -> i64 {
        self.packing.size as i64
    }

    fn depth(&self, ideal: &MonomialIdeal, field: FieldChoice) -> Result<i64, HarnessError> {
        let mut opts = DepthOptions::new(field);
        opts.var_cap = self.var_cap;
        Ok(depth_ideal_with(ideal, &opts)? as i64)
    }

    fn edge_params(&self, i: usize, j: usize) -> Params {
        Params {
            edge: Some([self.g.label(i).to_string(), self.g.label(j).to_string()]),
            ..Params::default()
        }
    }

    fn edge_a_params(&self, i: usize, j: usize, a: VertexSet) -> Params {
        Params {
            a: Some(self.g.set_labels(a)),
            ..self.edge_params(i, j)
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn outcome(
        &self,
        id: &str,
        holds: bool,
        lhs: Value,
        rhs: Value,
        params: Params,
        field: Option<FieldChoice>,
        start: Instant,
        extra: Witness,
    ) -> CheckOutcome {
        let witness = if holds {
            (extra != Witness::default()).then_some(extra)
        } else {
            Some(Witness {
                centers: Some(self.g.set_labels(self.packing.centers)),
                ..extra
            })
        };
        CheckOutcome {
            check_id: id.to_string(),
            graph_id: self.graph_id.clone(),
            status: if holds { Status::Holds } else { Status::Fails },
            lhs: Some(lhs),
            rhs: Some(rhs),
            params,
            witness,
            sampled: false,
            field_char: field,
            elapsed_ms: elapsed_ms(start),
        }
    }

    /// `G \ A` and the positions of `x_i`, `x_j` in it.
    fn without(&self, i: usize, j: usize, a: VertexSet) -> Result<(Graph, usize, usize), HarnessError> {
        self.g.check_admissible(i, j, a)?;
        let h = self.g.delete_vertices(a)?;
        let hi = h.index_of(self.g.label(i)).expect("x_i survives");
        let hj = h.index_of(self.g.label(j)).expect("x_j survives");
        Ok((h, hi, hj))
    }

    pub(super) fn prop_spn(&self, field: FieldChoice) -> Result<CheckOutcome, HarnessError> {
        if self.g.is_edgeless() {
            return Ok(CheckOutcome::not_applicable("spn", self.g, "graph has no edges"));
        }
        let start = Instant::now();
        let lhs = self.depth(&MonomialIdeal::edge_ideal(self.g), field)?;
        let rhs = self.alpha2() + 1;
        Ok(self.outcome(
            "spn",
            lhs >= rhs,
            Value::Int(lhs),
            Value::Int(rhs),
            Params::default(),
            Some(field),
            start,
            Witness::default(),
        ))
    }

    pub(super) fn lemma_star(&self) -> Vec<CheckOutcome> {
        let triangles = self.g.triangles();
        if triangles.is_empty() {
            return vec![CheckOutcome::not_applicable("star", self.g, "graph has no triangle")];
        }
        if !self.g.is_wk3_free() {
            return vec![CheckOutcome::not_applicable(
                "star",
                self.g,
                "graph contains an induced whiskered triangle",
            )];
        }
        triangles
            .into_iter()
            .map(|t| {
                let start = Instant::now();
                let removed = self.g.neighborhood_of(VertexSet::from_indices(t));
                let lhs = self.g.delete_vertices(removed).expect("subset").alpha2() as i64;
                let rhs = self.alpha2() - 2;
                let params = Params {
                    triangle: Some(t.map(|v| self.g.label(v).to_string())),
                    ..Params::default()
                };
                self.outcome(
                    "star",
                    lhs >= rhs,
                    Value::Int(lhs),
                    Value::Int(rhs),
                    params,
                    None,
                    start,
                    Witness::default(),
                )
            })
            .collect()
    }

    pub(super) fn lemma_int(&self, i: usize, j: usize) -> Result<CheckOutcome, HarnessError> {
        let start = Instant::now();
        let (gp, l) = self.g.even_connection_graph(i, j, VertexSet::EMPTY)?;
        let ideal = MonomialIdeal::edge_ideal(self.g);
        let n = self.g.n();
        let lhs = ideal
            .colon(&Monomial::var(n, i))?
            .intersect(&ideal.colon(&Monomial::var(n, j))?)?;
        let amb = ideal.ambient().clone();
        let rhs = MonomialIdeal::edge_ideal(&gp)
            .embed(&amb)?
            .sum(&MonomialIdeal::variables(amb, l))?;
        let extra = Witness {
            l: Some(self.g.set_labels(l)),
            generator: first_difference(&lhs, &rhs),
            ..Witness::default()
        };
        Ok(self.outcome(
            "int",
            lhs == rhs,
            ideal_value(&lhs),
            ideal_value(&rhs),
            self.edge_params(i, j),
            None,
            start,
            extra,
        ))
    }

    /// `(I(G\A) : x_i) ∩ (I(G\A) : x_j)` over the variables of `G \ A`.
    fn colon_intersection(h: &Graph, hi: usize, hj: usize) -> Result<MonomialIdeal, HarnessError> {
        let ideal = MonomialIdeal::edge_ideal(h);
        let n = h.n();
        Ok(ideal
            .colon(&Monomial::var(n, hi))?
            .intersect(&ideal.colon(&Monomial::var(n, hj))?)?)
    }

    pub(super) fn lemma_depthlem(
        &self,
        i: usize,
        j: usize,
        a: VertexSet,
        field: FieldChoice,
    ) -> Result<CheckOutcome, HarnessError> {
        let start = Instant::now();
        let (h, hi, hj) = self.without(i, j, a)?;
        let ideal = Self::colon_intersection(&h, hi, hj)?;
        let lhs = self.depth(&ideal, field)?;
        let rhs = self.alpha2();
        Ok(self.outcome(
            "depthlem",
            lhs >= rhs,
            Value::Int(lhs),
            Value::Int(rhs),
            self.edge_a_params(i, j, a),
            Some(field),
            start,
            Witness::default(),
        ))
    }

    pub(super) fn cor_cordepth(
        &self,
        i: usize,
        j: usize,
        a: VertexSet,
        field: FieldChoice,
    ) -> Result<CheckOutcome, HarnessError> {
        let start = Instant::now();
        let (h, hi, hj) = self.without(i, j, a)?;
        let (gp, l) = self.g.even_connection_graph(i, j, a)?;
        let amb = crate::ideal::ambient(h.labels());
        let l_in_h = h.set_of(&self.g.set_labels(l))?;
        let ideal = MonomialIdeal::edge_ideal(&gp)
            .embed(&amb)?
            .sum(&MonomialIdeal::variables(amb, l_in_h))?;
        let colon_side = Self::colon_intersection(&h, hi, hj)?;
        let identity = colon_side == ideal;
        let lhs = self.depth(&ideal, field)?;
        let rhs = self.alpha2();
        let extra = Witness {
            l: Some(self.g.set_labels(l)),
            generator: first_difference(&colon_side, &ideal),
            note: (!identity).then(|| format!("colon intersection {colon_side} differs from {ideal}")),
            ..Witness::default()
        };
        Ok(self.outcome(
            "cordepth",
            identity && lhs >= rhs,
            Value::Int(lhs),
            Value::Int(rhs),
            self.edge_a_params(i, j, a),
            Some(field),
            start,
            extra,
        ))
    }

    pub(super) fn lemma_last(
        &self,
        i: usize,
        j: usize,
        a: VertexSet,
        field: FieldChoice,
    ) -> Result<CheckOutcome, HarnessError> {
        let start = Instant::now();
        let (h, hi, hj) = self.without(i, j, a)?;
        let colon = squared_colon(&h, hi, hj)?;
        let lhs = self.depth(&colon, field)?;
        let refined = self.g.is_wk3_free();
        let rhs = self.alpha2() - if refined { 1 } else { 2 };
        let extra = Witness {
            note: refined.then(|| "whiskered-triangle-free bound".to_string()),
            ..Witness::default()
        };
        Ok(self.outcome(
            "last",
            lhs >= rhs,
            Value::Int(lhs),
            Value::Int(rhs),
            self.edge_a_params(i, j, a),
            Some(field),
            start,
            extra,
        ))
    }

    pub(super) fn main(&self, field: FieldChoice) -> Result<Vec<CheckOutcome>, HarnessError> {
        if self.g.is_edgeless() {
            return Ok(vec![CheckOutcome::not_applicable(
                "main1",
                self.g,
                "graph has no edges",
            )]);
        }
        let start = Instant::now();
        let square = MonomialIdeal::edge_ideal(self.g).power(2)?;
        let depth = self.depth(&square, field)?;
        let a2 = self.alpha2();
        let mut parts = vec![("main1", a2 - 2)];
        if self.g.is_wk3_free() {
            parts.push(("main2", a2 - 1));
        }
        if self.g.is_triangle_free() {
            parts.push(("main3", a2));
        }
        Ok(parts
            .into_iter()
            .map(|(id, rhs)| {
                self.outcome(
                    id,
                    depth >= rhs,
                    Value::Int(depth),
                    Value::Int(rhs),
                    Params::default(),
                    Some(field),
                    start,
                    Witness::default(),
                )
            })
            .collect())
    }

    pub(super) fn banerjee_colon(&self, i: usize, j: usize, a: VertexSet) -> Result<CheckOutcome, HarnessError> {
        let start = Instant::now();
        let (h, hi, hj) = self.without(i, j, a)?;
        let colon = squared_colon(&h, hi, hj)?;
        let (full, split, l) = even_connection_formula(&h, hi, hj)?;
        let holds = colon == full && colon == split;
        let component = h.neighbors(hi).union(h.neighbors(hj)) == VertexSet::from_indices([hi, hj]);
        let extra = Witness {
            l: Some(h.set_labels(l)),
            generator: first_difference(&colon, &split).or_else(|| first_difference(&colon, &full)),
            note: component.then(|| "edge is a connected component: (I^2 : e) = I".to_string()),
            ..Witness::default()
        };
        Ok(self.outcome(
            "banerjee",
            holds,
            ideal_value(&colon),
            ideal_value(&split),
            self.edge_a_params(i, j, a),
            None,
            start,
            extra,
        ))
    }

    pub(super) fn morey(&self, i: usize, j: usize) -> Result<CheckOutcome, HarnessError> {
        let start = Instant::now();
        let pool = self.g.admissible_pool(i, j);
        let (h, hi, hj) = self.without(i, j, pool)?;
        let colon = squared_colon(&h, hi, hj)?;
        let ideal = MonomialIdeal::edge_ideal(&h);
        let extra = Witness {
            generator: first_difference(&colon, &ideal),
            ..Witness::default()
        };
        Ok(self.outcome(
            "morey",
            colon == ideal,
            ideal_value(&colon),
            ideal_value(&ideal),
            self.edge_a_params(i, j, pool),
            None,
            start,
            extra,
        ))
    }

    pub(super) fn symbolic_square(&self, field: FieldChoice) -> Result<Vec<CheckOutcome>, HarnessError> {
        let start = Instant::now();
        let ideal = MonomialIdeal::edge_ideal(self.g);
        let square = ideal.power(2)?;
        let symbolic = symbolic_square_edge_ideal(self.g);
        let mut out = Vec::new();

        if self.g.is_triangle_free() {
            out.push(self.outcome(
                "symbolic.eq",
                square == symbolic,
                ideal_value(&square),
                ideal_value(&symbolic),
                Params::default(),
                None,
                start,
                Witness {
                    generator: first_difference(&square, &symbolic),
                    ..Witness::default()
                },
            ));
        } else {
            out.push(CheckOutcome::not_applicable(
                "symbolic.eq",
                self.g,
                "graph has a triangle",
            ));
        }

        let n = self.g.n();
        let cubes: Vec<Monomial> = self
            .g
            .triangles()
            .into_iter()
            .map(|t| Monomial::from_set(n, VertexSet::from_indices(t)))
            .collect();
        let formula = square.sum(&MonomialIdeal::new(ideal.ambient().clone(), cubes)?)?;
        let sandwich = square.is_subideal_of(&symbolic) && symbolic.is_subideal_of(&ideal);
        out.push(self.outcome(
            "symbolic.triangles",
            formula == symbolic && sandwich,
            ideal_value(&formula),
            ideal_value(&symbolic),
            Params::default(),
            None,
            start,
            Witness {
                generator: first_difference(&formula, &symbolic),
                note: (!sandwich).then(|| "I^2 ⊆ I^(2) ⊆ I violated".to_string()),
                ..Witness::default()
            },
        ));

        if self.g.is_edgeless() {
            out.push(CheckOutcome::not_applicable(
                "symbolic.depth",
                self.g,
                "graph has no edges",
            ));
        } else {
            let lhs = self.depth(&symbolic, field)?;
            let rhs = self.alpha2();
            out.push(self.outcome(
                "symbolic.depth",
                lhs >= rhs,
                Value::Int(lhs),
                Value::Int(rhs),
                Params::default(),
                Some(field),
                start,
                Witness::default(),
            ));
        }
        Ok(out)
    }

    /// Searches for an order `u_1, ..., u_m` of the edges such that every
    /// `((I^2 + (u_1..u_{k-1})) : u_k)` equals `(I^2 : u_k)` plus variables
    /// drawn from the admissible pool of `u_k`.
    pub(super) fn order_decomposition(&self) -> Result<CheckOutcome, HarnessError> {
        const MAX_EDGES: usize = 8;
        let edges = self.g.edges();
        if edges.is_empty() {
            return Ok(CheckOutcome::not_applicable("order", self.g, "graph has no edges"));
        }
        if edges.len() > MAX_EDGES {
            return Ok(CheckOutcome::not_applicable("order", self.g, "more than 8 edges"));
        }
        let start = Instant::now();
        let n = self.g.n();
        let ideal = MonomialIdeal::edge_ideal(self.g);
        let amb = ideal.ambient().clone();
        let square = ideal.power(2)?;
        let gens: Vec<Monomial> = edges
            .iter()
            .map(|&(u, v)| Monomial::from_set(n, VertexSet::from_indices([u, v])))
            .collect();
        let m = edges.len();
        let plain: Vec<MonomialIdeal> = gens.iter().map(|u| square.colon(u)).collect::<Result<_, _>>()?;

        let step_ok = |before: u64, k: usize| -> Result<bool, HarnessError> {
            let prefix: Vec<Monomial> = crate::graph::Bits(before).map(|s| gens[s].clone()).collect();
            let colon = square.sum(&MonomialIdeal::new(amb.clone(), prefix)?)?.colon(&gens[k])?;
            let vars = colon.variable_generators();
            let (i, j) = edges[k];
            Ok(vars.is_subset(self.g.admissible_pool(i, j))
                && colon == plain[k].sum(&MonomialIdeal::variables(amb.clone(), vars))?)
        };

        // reachable[S]: some ordering of S satisfies the condition at every step
        let full = (1u64 << m) - 1;
        let mut parent: Vec<Option<(u64, usize)>> = vec![None; 1 << m];
        let mut reachable = vec![false; 1 << m];
        reachable[0] = true;
        for set in 0..=full {
            if !reachable[set as usize] {
                continue;
            }
            for k in 0..m {
                let next = set | 1 << k;
                if next == set || reachable[next as usize] {
                    continue;
                }
                if step_ok(set, k)? {
                    reachable[next as usize] = true;
                    parent[next as usize] = Some((set, k));
                }
            }
        }
        let found = reachable[full as usize];
        let note = if found {
            let mut order = Vec::new();
            let mut cur = full;
            while let Some((prev, k)) = parent[cur as usize] {
                let (u, v) = edges[k];
                order.push(format!("{}{}", self.g.label(u), self.g.label(v)));
                cur = prev;
            }
            order.reverse();
            format!("order {}", order.join(","))
        } else {
            "no generator order satisfies the decomposition".to_string()
        };
        Ok(self.outcome(
            "order",
            found,
            Value::Int(found as i64),
            Value::Int(1),
            Params::default(),
            None,
            start,
            Witness {
                note: Some(note),
                ..Witness::default()
            },
        ))
    }

    pub(super) fn deletion_bound(&self, i: usize, j: usize, a: VertexSet) -> Result<CheckOutcome, HarnessError> {
        let start = Instant::now();
        self.g.check_admissible(i, j, a)?;
        let alpha_without = |s: VertexSet| self.g.delete_vertices(s).expect("subset").alpha2() as i64;
        let ni = self.g.closed_neighbors(i);
        let nj = self.g.closed_neighbors(j);
        let values = [
            ("drop_a_ni", alpha_without(a.union(ni))),
            ("drop_a_nj", alpha_without(a.union(nj))),
            ("drop_ni_nj", alpha_without(ni.union(nj))),
            ("drop_a", alpha_without(a)),
        ];
        let lhs = values.iter().map(|v| v.1).min().expect("nonempty");
        let rhs = self.alpha2() - 2;
        let note = values
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        Ok(self.outcome(
            "deletion",
            lhs >= rhs,
            Value::Int(lhs),
            Value::Int(rhs),
            self.edge_a_params(i, j, a),
            None,
            start,
            Witness {
                note: Some(note),
                ..Witness::default()
            },
        ))
    }
}

/// `(I(H)^2 : x_i x_j)`.
fn squared_colon(h: &Graph, hi: usize, hj: usize) -> Result<MonomialIdeal, HarnessError> {
    let n = h.n();
    Ok(MonomialIdeal::edge_ideal(h)
        .power(2)?
        .colon(&Monomial::from_set(n, VertexSet::from_indices([hi, hj])))?)
}

/// Both forms of the even-connection description of `(I(H)^2 : x_i x_j)`:
/// `I(H) + (x_p x_q : p ~ x_i, q ~ x_j)` and the same with `p ≠ q` plus the
/// squares of the common neighbours `L`. Also returns `L`.
pub fn even_connection_formula(
    h: &Graph,
    hi: usize,
    hj: usize,
) -> Result<(MonomialIdeal, MonomialIdeal, VertexSet), HarnessError> {
    let n = h.n();
    let ideal = MonomialIdeal::edge_ideal(h);
    let amb = ideal.ambient().clone();
    let ni = h.neighbors(hi);
    let nj = h.neighbors(hj);
    let l = ni.intersection(nj);
    let mut all_pairs = Vec::new();
    let mut distinct = Vec::new();
    for p in ni.iter() {
        for q in nj.iter() {
            let m = Monomial::var(n, p).mul(&Monomial::var(n, q));
            if p != q {
                distinct.push(m.clone());
            }
            all_pairs.push(m);
        }
    }
    let squares: Vec<Monomial> = l
        .iter()
        .map(|k| Monomial::var(n, k).mul(&Monomial::var(n, k)))
        .collect();
    let full = ideal.sum(&MonomialIdeal::new(amb.clone(), all_pairs)?)?;
    let split = ideal
        .sum(&MonomialIdeal::new(amb.clone(), distinct)?)?
        .sum(&MonomialIdeal::new(amb, squares)?)?;
    Ok((full, split, l))
}

fn edge_indices(edge: (usize, usize)) -> (usize, usize) {
    (edge.0.min(edge.1), edge.0.max(edge.1))
}

/// `depth I(G) >= alpha2(G) + 1`; not applicable to edgeless graphs.
pub fn check_prop_spn(g: &Graph, field: FieldChoice) -> Result<CheckOutcome, HarnessError> {
    Ctx::new(g, DEFAULT_VAR_CAP).prop_spn(field)
}

/// For whiskered-triangle-free graphs, one outcome per triangle `x1 x2 x3`:
/// `alpha2(G \ (N(x1) ∪ N(x2) ∪ N(x3))) >= alpha2(G) - 2`.
pub fn check_lemma_star(g: &Graph) -> Vec<CheckOutcome> {
    Ctx::new(g, DEFAULT_VAR_CAP).lemma_star()
}

/// `(I(G) : x_i) ∩ (I(G) : x_j) = I(G') + (L)` as an exact ideal equality.
pub fn check_lemma_int(g: &Graph, edge: (usize, usize)) -> Result<CheckOutcome, HarnessError> {
    let (i, j) = edge_indices(edge);
    Ctx::new(g, DEFAULT_VAR_CAP).lemma_int(i, j)
}

/// `depth (I(G\A) : x_i) ∩ (I(G\A) : x_j) >= alpha2(G)` over the ring without `A`.
pub fn check_lemma_depthlem(
    g: &Graph,
    edge: (usize, usize),
    a: VertexSet,
    field: FieldChoice,
) -> Result<CheckOutcome, HarnessError> {
    let (i, j) = edge_indices(edge);
    Ctx::new(g, DEFAULT_VAR_CAP).lemma_depthlem(i, j, a, field)
}

/// `depth (I(G') + (L)) >= alpha2(G)`, together with the identity between
/// `I(G') + (L)` and the colon intersection over `G \ A`.
pub fn check_cor_cordepth(
    g: &Graph,
    edge: (usize, usize),
    a: VertexSet,
    field: FieldChoice,
) -> Result<CheckOutcome, HarnessError> {
    let (i, j) = edge_indices(edge);
    Ctx::new(g, DEFAULT_VAR_CAP).cor_cordepth(i, j, a, field)
}

/// `depth (I(G\A)^2 : x_i x_j) >= alpha2(G) - 2`, or `- 1` when `G` is
/// whiskered-triangle-free.
pub fn check_lemma_last(
    g: &Graph,
    edge: (usize, usize),
    a: VertexSet,
    field: FieldChoice,
) -> Result<CheckOutcome, HarnessError> {
    let (i, j) = edge_indices(edge);
    Ctx::new(g, DEFAULT_VAR_CAP).lemma_last(i, j, a, field)
}

/// Lower bounds for `depth I(G)^2`: `alpha2 - 2` always (`main1`),
/// `alpha2 - 1` without induced whiskered triangles (`main2`), `alpha2`
/// without triangles (`main3`). One outcome per applicable part.
pub fn check_main(g: &Graph, field: FieldChoice) -> Result<Vec<CheckOutcome>, HarnessError> {
    Ctx::new(g, DEFAULT_VAR_CAP).main(field)
}

/// The even-connection formula for `(I(G\A)^2 : x_i x_j)` against the
/// generator-wise colon.
pub fn check_banerjee_colon(g: &Graph, edge: (usize, usize), a: VertexSet) -> Result<CheckOutcome, HarnessError> {
    let (i, j) = edge_indices(edge);
    Ctx::new(g, DEFAULT_VAR_CAP).banerjee_colon(i, j, a)
}

/// `(I(G\A)^2 : x_i x_j) = I(G\A)` when `A` is the whole admissible pool, so
/// that the edge is a connected component of `G \ A`.
pub fn check_morey(g: &Graph, edge: (usize, usize)) -> Result<CheckOutcome, HarnessError> {
    let (i, j) = edge_indices(edge);
    Ctx::new(g, DEFAULT_VAR_CAP).morey(i, j)
}

/// `I^2 = I^(2)` for triangle-free graphs, `I^(2) = I^2 + (triangles)` with
/// `I^2 ⊆ I^(2) ⊆ I` always, and `depth I^(2) >= alpha2`.
pub fn check_symbolic_square(g: &Graph, field: FieldChoice) -> Result<Vec<CheckOutcome>, HarnessError> {
    Ctx::new(g, DEFAULT_VAR_CAP).symbolic_square(field)
}

/// Existence of a generator order realizing the colon decomposition; graphs
/// with more than 8 edges are not applicable.
pub fn check_order_decomposition(g: &Graph) -> Result<CheckOutcome, HarnessError> {
    Ctx::new(g, DEFAULT_VAR_CAP).order_decomposition()
}

/// Star packing after the deletions used in the depth arguments:
/// `G \ (A ∪ N[x_i])`, `G \ (A ∪ N[x_j])`, `G \ (N[x_i] ∪ N[x_j])` and
/// `G \ A` all keep `alpha2 >= alpha2(G) - 2`.
pub fn check_deletion_bound(g: &Graph, edge: (usize, usize), a: VertexSet) -> Result<CheckOutcome, HarnessError> {
    let (i, j) = edge_indices(edge);
    Ctx::new(g, DEFAULT_VAR_CAP).deletion_bound(i, j, a)
}

/// The three sharp instances: whiskered triangle, whiskered triangle minus a
/// leaf, and the path on four vertices. Depths `1, 1, 2` and star packing
/// numbers `3, 2, 2` are asserted exactly, as is equality with the matching
/// lower bound.
pub fn check_examples_sharp(field: FieldChoice) -> Result<Vec<CheckOutcome>, HarnessError> {
    let cases = [
        (named::whiskered_triangle(), 1i64, 3i64, 2i64),
        (named::whiskered_triangle_minus_leaf(), 1, 2, 1),
        (named::path(4), 2, 2, 0),
    ];
    let mut out = Vec::new();
    for (g, depth_expected, alpha_expected, slack) in cases {
        let ctx = Ctx::new(&g, DEFAULT_VAR_CAP);
        let start = Instant::now();
        let depth = ctx.depth(&MonomialIdeal::edge_ideal(&g).power(2)?, field)?;
        let a2 = ctx.alpha2();
        let eq = |id: &str, lhs: i64, rhs: i64, f: Option<FieldChoice>| {
            ctx.outcome(
                id,
                lhs == rhs,
                Value::Int(lhs),
                Value::Int(rhs),
                Params::default(),
                f,
                start,
                Witness::default(),
            )
        };
        out.push(eq("examples.depth", depth, depth_expected, Some(field)));
        out.push(eq("examples.alpha2", a2, alpha_expected, None));
        out.push(eq("examples.sharp", depth, a2 - slack, Some(field)));
    }
    Ok(out)
}
