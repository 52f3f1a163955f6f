#!/usr/bin/env python
"""Mininet deployment for a generated evaluation scenario.

class=sparse n=6 seed=7 edges=6 flows=2 created=1970-01-01T00:00:00Z

One switch and one attached host per node; inter-switch links carry
the scenario's bandwidth (Mbit/s), delay/jitter (ms) and loss (%).
"""

from mininet.cli import CLI
from mininet.link import TCLink
from mininet.log import setLogLevel
from mininet.net import Mininet
from mininet.node import OVSKernelSwitch


def build_net():
    net = Mininet(switch=OVSKernelSwitch, link=TCLink, autoSetMacs=True)
    net.addController('c0')
    s0 = net.addSwitch('s0')
    s1 = net.addSwitch('s1')
    s2 = net.addSwitch('s2')
    s3 = net.addSwitch('s3')
    s4 = net.addSwitch('s4')
    s5 = net.addSwitch('s5')
    h0 = net.addHost('h0', ip='10.0.0.1/24')
    h1 = net.addHost('h1', ip='10.0.0.2/24')
    h2 = net.addHost('h2', ip='10.0.0.3/24')
    h3 = net.addHost('h3', ip='10.0.0.4/24')
    h4 = net.addHost('h4', ip='10.0.0.5/24')
    h5 = net.addHost('h5', ip='10.0.0.6/24')
    net.addLink(h0, s0)
    net.addLink(h1, s1)
    net.addLink(h2, s2)
    net.addLink(h3, s3)
    net.addLink(h4, s4)
    net.addLink(h5, s5)
    net.addLink(s0, s3, bw=34, delay='7.75599400961136ms', jitter='0.0546815248771102ms', loss=1.671994988767368)
    net.addLink(s0, s4, bw=87, delay='5.478311334808428ms', jitter='0.036630812400795465ms', loss=0.35305175865288974)
    net.addLink(s1, s3, bw=22, delay='7.786720478973244ms', jitter='0.37745723136231ms', loss=4.556081759166741)
    net.addLink(s1, s5, bw=96, delay='4.306378571972548ms', jitter='0.6236950754962833ms', loss=3.7710451582988047)
    net.addLink(s2, s3, bw=24, delay='9.479803482451498ms', jitter='0.5089871943986864ms', loss=4.037234503560297)
    net.addLink(s2, s4, bw=34, delay='9.983630041783695ms', jitter='0.5761909636639948ms', loss=2.5325465565369516)
    return net


if __name__ == '__main__':
    setLogLevel('info')
    net = build_net()
    net.start()
    CLI(net)
    net.stop()
