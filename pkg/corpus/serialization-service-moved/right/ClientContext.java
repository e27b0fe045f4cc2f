package com.hazelcast.client.proxy;

public class ClientContext {
    public void shutdown() {
    }
}
