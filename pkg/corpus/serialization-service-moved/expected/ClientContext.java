package com.hazelcast.client.proxy;

public class ClientContext {
    public SerializationService getSerializationService() {
        return null;
    }

    public void shutdown() {
    }
}
