use std::fmt;

use serde::Serialize;

use super::Quiver;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DynkinFamily {
    A,
    D,
    E,
}

/// One connected component of a simply-laced Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DynkinComponent {
    pub family: DynkinFamily,
    pub rank: usize,
    pub vertices: Vec<usize>,
}

impl DynkinComponent {
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            DynkinFamily::A => n * (n + 1) / 2,
            DynkinFamily::D => n * (n - 1),
            DynkinFamily::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }
}

impl fmt::Display for DynkinComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// Neighbours in the underlying simple graph, rejecting multiple edges.
pub(super) fn simple_adjacency(q: &Quiver) -> Result<Vec<Vec<usize>>> {
    let n = q.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for a in q.arrows() {
        if adj[a.tail].contains(&a.head) {
            return Err(Error::NotDynkin(format!(
                "more than one arrow between {} and {}",
                q.vertex_id(a.tail),
                q.vertex_id(a.head)
            )));
        }
        adj[a.tail].push(a.head);
        adj[a.head].push(a.tail);
    }
    Ok(adj)
}

pub(super) fn classify(q: &Quiver) -> Result<Vec<DynkinComponent>> {
    let adj = simple_adjacency(q)?;
    let mut out = Vec::new();
    for comp in q.components() {
        let edges: usize = comp.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
        if edges + 1 != comp.len() {
            return Err(Error::NotDynkin(format!(
                "component containing {} has a cycle in its underlying graph",
                q.vertex_id(comp[0])
            )));
        }
        let branch: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() > 2).collect();
        let family = match branch.as_slice() {
            [] => DynkinFamily::A,
            [b] if adj[*b].len() == 3 => {
                let mut arms: Vec<usize> = adj[*b].iter().map(|&s| arm_length(&adj, *b, s)).collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => DynkinFamily::D,
                    [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => DynkinFamily::E,
                    _ => {
                        return Err(Error::NotDynkin(format!(
                            "branch vertex {} has arms {arms:?}",
                            q.vertex_id(*b)
                        )))
                    }
                }
            }
            _ => {
                return Err(Error::NotDynkin(format!(
                    "component containing {} branches too much",
                    q.vertex_id(comp[0])
                )))
            }
        };
        out.push(DynkinComponent {
            family,
            rank: comp.len(),
            vertices: comp,
        });
    }
    Ok(out)
}

fn arm_length(adj: &[Vec<usize>], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
        if adj[cur].len() > 2 {
            break;
        }
        (prev, cur) = (cur, next);
        len += 1;
    }
    len
}
