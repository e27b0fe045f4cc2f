package com.hazelcast.client.proxy;

public class ClientMap {
    public SerializationService getSerializationService() {
        return null;
    }

    public ClientContext getContext() {
        return null;
    }
}
