package com.hazelcast.config;

public class XmlClientConfigBuilder {
    private void handleSerializers(final Node node) {
        for (Node child : childElements(node)) {
            final String name2 = cleanNodeName(child);
            if ("serializer".equals(name2)) {
                SerializerConfig serializer = new SerializerConfig();
                serializer.setClassName(getAttribute(child, "class-name"));
                final String typeClassName = getAttribute(child, "type-class");
                serializer.setTypeClassName(typeClassName);
                addSerializerConfig(serializer);
            }
        }
    }

private Iterable<Node> childElements(Node node) {
    return null;
}

private String cleanNodeName(Node child) {
    return null;
}

private String getAttribute(Node node, String name) {
    return null;
}

    private void addTypeSerializer(TypeSerializerConfig serializerConfig) {
    }
}
